// catphase command-line front end.
//
// Every subcommand resolves one RunConfig from (defaults <- config file <-
// command-line flags), validates it, computes, and writes files under the
// output directory.  Output headers/manifests echo the full resolved
// configuration, so any file can be reproduced by feeding its header back
// as a config.  Exit code 0 means every requested output was written and
// all validations passed.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catphase/detection.hpp"
#include "catphase/fock.hpp"
#include "catphase/io.hpp"
#include "catphase/negativity.hpp"
#include "catphase/optimize.hpp"
#include "catphase/photon_statistics.hpp"
#include "catphase/probe.hpp"
#include "catphase/run_config.hpp"
#include "catphase/special_functions.hpp"
#include "catphase/version.hpp"
#include "catphase/wigner.hpp"

namespace {

using catphase::RunConfig;
namespace io = catphase::io;
namespace fs = std::filesystem;

io::Meta make_meta(const std::string& command, const RunConfig& cfg) {
  io::Meta meta;
  meta.emplace_back("command", command);
  for (auto& kv : cfg.to_pairs()) meta.push_back(std::move(kv));
  return meta;
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out);
  return fs::path(cfg.out) / name;
}

catphase::ProbeSpec probe_from(const RunConfig& cfg, double delta0) {
  return catphase::ProbeSpec::displaced(cfg.alpha, cfg.r, cfg.eta1, cfg.eta2,
                                        delta0);
}

catphase::OptimizeOptions optimize_options(const RunConfig& cfg) {
  catphase::OptimizeOptions opts;
  opts.delta0_lo = cfg.opt_delta0_min;
  opts.delta0_hi = cfg.opt_delta0_max;
  opts.r_lo = cfg.opt_r_min;
  opts.r_hi = cfg.opt_r_max;
  opts.coarse_delta0 = cfg.coarse_delta0;
  opts.coarse_r = cfg.coarse_r;
  opts.refine_starts = cfg.refine_starts;
  opts.fock_dim = cfg.opt_dim;
  opts.threads = cfg.threads;
  opts.minima_threshold = cfg.minima_threshold;
  return opts;
}

int cmd_wigner(const RunConfig& cfg) {
  const catphase::WignerCoeffs co = wigner_coeffs(probe_from(cfg, cfg.delta0));
  double x_lo = cfg.x_min, x_hi = cfg.x_max;
  double p_lo = cfg.p_min, p_hi = cfg.p_max;
  if (cfg.auto_box) {
    const catphase::PhaseSpaceBox box = wigner_box(co);
    x_lo = box.x_lo;
    x_hi = box.x_hi;
    p_lo = box.p_lo;
    p_hi = box.p_hi;
  }
  const std::vector<double> xs = catphase::linspace(x_lo, x_hi, cfg.x_count);
  const std::vector<double> ps = catphase::linspace(p_lo, p_hi, cfg.p_count);
  std::vector<double> w(xs.size() * ps.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      w[i * ps.size() + j] = wigner_eval(co, xs[i], ps[j]);

  // grids are always CSV (the natural format for external plotting); the
  // manifest carries the resolved configuration
  const io::Meta meta = make_meta("wigner", cfg);
  io::write_file(out_path(cfg, "wigner.csv").string(),
                 io::wigner_grid_csv(meta, xs, ps, w));
  io::write_file(out_path(cfg, "wigner_manifest.json").string(),
                 io::manifest_json("wigner", meta));
  return 0;
}

int cmd_negativity(const RunConfig& cfg) {
  const double eta = cfg.eta1 * cfg.eta2;
  const std::vector<double> rs =
      catphase::linspace(cfg.r_min, cfg.r_max, cfg.r_count);
  std::vector<io::NegativityRow> rows;
  rows.reserve(rs.size());
  int numeric_failures = 0;
  for (double r : rs) {
    io::NegativityRow row;
    row.r = r;
    row.db = catphase::db_from_r(r);
    row.v_analytic = catphase::negativity_analytic(cfg.alpha, r, eta);
    const auto validity = catphase::negativity_validity(cfg.alpha, r, eta);
    row.valid = validity.valid;
    row.margin = validity.margin;
    if (cfg.with_numeric) {
      try {
        const auto co = catphase::wigner_coeffs(cfg.alpha, r, eta, 0.0);
        row.v_numeric = catphase::negativity_numeric(co);
      } catch (const std::exception& e) {
        ++numeric_failures;
        std::cerr << "negativity: numeric column skipped at r=" << r << ": "
                  << e.what() << "\n";
      }
    }
    rows.push_back(row);
  }
  const io::Meta meta = make_meta("negativity", cfg);
  io::write_file(out_path(cfg, "negativity.csv").string(),
                 io::negativity_csv(meta, rows));
  io::write_file(out_path(cfg, "negativity_manifest.json").string(),
                 io::manifest_json("negativity", meta));
  return numeric_failures == 0 ? 0 : 1;
}

struct EngineRun {
  std::string engine;
  catphase::PhotonDistribution dist;
};

EngineRun run_engine(const RunConfig& cfg, const std::string& engine,
                     double delta0, int n_eff) {
  const catphase::ProbeSpec spec = probe_from(cfg, delta0);
  if (engine == "closed") {
    const catphase::EffectiveChannel ec = effective_channel(spec);
    return {"closed", catphase::closed_form_distribution(
                          cfg.alpha, cfg.r, ec.eta, ec.delta, n_eff,
                          cfg.n_stable)};
  }
  if (engine == "quadrature") {
    return {"quadrature",
            catphase::quadrature_distribution(wigner_coeffs(spec), n_eff)};
  }
  return {"combinatorial",
          catphase::pn_combinatorial(spec, cfg.dim, cfg.norm_tol)};
}

// Beyond n_stable the closed-form series is unreliable; fall back to the
// combinatorial engine for the whole request.
std::string resolve_engine(const RunConfig& cfg, const std::string& engine) {
  if (engine == "closed" && cfg.n_max > cfg.n_stable) {
    std::cerr << "photon-stats: n_max=" << cfg.n_max << " exceeds n_stable="
              << cfg.n_stable << "; switching to the combinatorial engine\n";
    return "combinatorial";
  }
  return engine;
}

int cmd_photon_stats(const RunConfig& cfg) {
  const io::Meta meta = make_meta("photon-stats", cfg);
  std::vector<io::NamedDistribution> outputs;
  std::vector<io::DistancePair> deltas;

  if (cfg.engine == "all") {
    // align every route on a common support for the pairwise comparison
    const int n_eff = std::min(cfg.n_max, cfg.n_stable);
    for (const char* name : {"closed", "quadrature", "combinatorial"}) {
      EngineRun run = run_engine(cfg, name, cfg.delta0, n_eff);
      outputs.push_back({run.engine, run.dist.truncated(n_eff)});
    }
    for (std::size_t i = 0; i < outputs.size(); ++i)
      for (std::size_t j = i + 1; j < outputs.size(); ++j)
        deltas.push_back({outputs[i].engine, outputs[j].engine,
                          catphase::distribution_distance(outputs[i].dist,
                                                          outputs[j].dist)});
  } else {
    const std::string engine = resolve_engine(cfg, cfg.engine);
    EngineRun run = run_engine(cfg, engine, cfg.delta0, cfg.n_max);
    outputs.push_back({run.engine, std::move(run.dist)});
  }

  if (cfg.format == "json") {
    io::write_file(out_path(cfg, "photon_stats.json").string(),
                   io::distributions_json(meta, outputs, deltas));
  } else {
    for (const auto& named : outputs)
      io::write_file(
          out_path(cfg, "photon_stats_" + named.engine + ".csv").string(),
          io::distribution_csv(meta, named.dist));
    if (!deltas.empty())
      io::write_file(out_path(cfg, "photon_stats_delta.json").string(),
                     io::distributions_json(meta, outputs, deltas));
  }
  return 0;
}

int cmd_detect(const RunConfig& cfg) {
  const std::string engine =
      resolve_engine(cfg, cfg.engine == "all" ? "combinatorial" : cfg.engine);
  const catphase::PhotonDistribution p0 =
      run_engine(cfg, engine, 0.0, cfg.n_max).dist;
  const catphase::PhotonDistribution pd =
      run_engine(cfg, engine, cfg.delta0, cfg.n_max).dist;
  const catphase::DecisionRule rule = ml_partition(p0, pd);
  catphase::ErrorReport report = error_probs(rule, p0, pd);
  if (cfg.with_baseline)
    report.p_sq = catphase::squeezed_baseline(cfg.delta0, std::abs(cfg.r),
                                              cfg.eta1 * cfg.eta2);
  const io::Meta meta = make_meta("detect", cfg);
  io::write_file(out_path(cfg, "error_report.json").string(),
                 io::error_report_json(meta, report));
  io::write_file(out_path(cfg, "decision_regions.csv").string(),
                 io::decision_csv(meta, rule));
  return 0;
}

int cmd_landscape(const RunConfig& cfg) {
  const auto opts = optimize_options(cfg);
  const std::vector<double> d_grid =
      catphase::linspace(cfg.delta0_min, cfg.delta0_max, cfg.delta0_count);
  const std::vector<double> r_grid =
      catphase::linspace(cfg.r_min, cfg.r_max, cfg.r_count);
  const catphase::Landscape l =
      landscape(cfg.alpha, cfg.eta1 * cfg.eta2, d_grid, r_grid, opts);
  const io::Meta meta = make_meta("landscape", cfg);
  if (cfg.format == "json") {
    io::write_file(out_path(cfg, "landscape.json").string(),
                   io::landscape_json(meta, l));
  } else {
    io::write_file(out_path(cfg, "landscape.csv").string(),
                   io::landscape_csv(meta, l));
    io::write_file(out_path(cfg, "landscape_minima.csv").string(),
                   io::landscape_minima_csv(meta, l));
  }
  io::write_file(out_path(cfg, "landscape_manifest.json").string(),
                 io::manifest_json("landscape", meta));
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto opts = optimize_options(cfg);
  const std::vector<double> alphas =
      catphase::linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_count);
  const std::vector<double> etas =
      catphase::linspace(cfg.eta_min, cfg.eta_max, cfg.eta_count);
  const std::vector<catphase::SweepCell> cells = sweep(alphas, etas, opts);
  const io::Meta meta = make_meta("sweep", cfg);
  if (cfg.format == "json")
    io::write_file(out_path(cfg, "sweep.json").string(),
                   io::sweep_json(meta, cells));
  else
    io::write_file(out_path(cfg, "sweep.csv").string(),
                   io::sweep_csv(meta, cells));
  io::write_file(out_path(cfg, "sweep_manifest.json").string(),
                 io::manifest_json("sweep", meta));
  bool all_valid = true;
  for (const auto& c : cells) all_valid = all_valid && c.valid;
  return all_valid ? 0 : 1;
}

struct CheckReporter {
  int failures = 0;
  void operator()(bool ok, const std::string& name,
                  const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    if (!ok) ++failures;
  }
};

int cmd_validate(const RunConfig& cfg) {
  CheckReporter check;

  {  // closed form vs combinatorial over the reference band
    double worst = 0.0, worst_off_zero = 0.0;
    for (double r : catphase::linspace(0.0, 1.2, 7)) {
      for (double d0 : catphase::linspace(0.0, 1.5, 7)) {
        const auto spec = catphase::ProbeSpec::displaced(1.5, r, 1.0, 0.85, d0);
        const auto ec = effective_channel(spec);
        const auto closed = catphase::closed_form_distribution(
            1.5, r, ec.eta, ec.delta, 23, cfg.n_stable);
        const auto comb =
            catphase::pn_combinatorial(spec, 192, 1e-8).truncated(23);
        const double delta = distribution_distance(closed, comb);
        worst = std::max(worst, delta);
        if (r >= 0.2) worst_off_zero = std::max(worst_off_zero, delta);
      }
    }
    check(worst <= 0.002 && worst_off_zero <= 0.001,
          "closed-vs-combinatorial band",
          "max delta " + io::format_g17(worst) + ", off-zero " +
              io::format_g17(worst_off_zero));
  }

  {  // quadrature referee on a small grid
    double worst = 0.0;
    for (double alpha : {1.0, 2.0}) {
      for (double r : {0.0, 0.8}) {
        for (double eta : {0.9, 1.0}) {
          for (double d0 : {0.0, 1.0}) {
            const auto spec =
                catphase::ProbeSpec::displaced(alpha, r, 1.0, eta, d0);
            const auto quad = pn_quadrature_all(wigner_coeffs(spec), 12);
            const auto comb = catphase::pn_combinatorial(spec, 128, 1e-9);
            for (int n = 0; n <= 12; ++n)
              worst = std::max(worst, std::abs(quad[n] - comb.prob(n)));
          }
        }
      }
    }
    check(worst <= 1e-4, "fock-overlap referee",
          "max per-n difference " + io::format_g17(worst));
  }

  {  // negativity: analytic vs quadrature at gated bright-cat points
    double worst = 0.0;
    const double margins[] = {0.12, 0.4};
    for (double alpha : {4.0, 10.0}) {
      for (double margin : margins) {
        double lo = 0.0, hi = 12.0;  // bisection for the gate margin in r
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          (catphase::negativity_validity(alpha, mid, 1.0).margin < margin
               ? lo
               : hi) = mid;
        }
        const double r = hi;
        const double va = catphase::negativity_analytic(alpha, r, 1.0);
        const double vn =
            catphase::negativity_numeric(
                catphase::wigner_coeffs(alpha, r, 1.0, 0.0));
        worst = std::max(worst, std::abs(va - vn) / vn);
      }
    }
    check(worst <= 0.01, "negativity referee",
          "max gated relative difference " + io::format_g17(worst));
  }

  {  // homodyne baseline closed form vs direct integration
    double worst = 0.0;
    for (double d0 : {0.0, 1.0, 3.0}) {
      for (double r : {0.0, 0.6, 1.2}) {
        for (double eta : {0.9, 1.0}) {
          const double s = std::exp(-r);
          const double sigma = 0.5 * std::sqrt(eta * (s * s - 1.0) + 1.0);
          const double border = std::sqrt(eta) * d0 / 2.0;
          catphase::QuadratureOptions qo;
          qo.abs_tol = 1e-13;
          const auto fp = catphase::integrate_1d(
              [&](double p) { return catphase::homodyne_pdf(p, 0.0, r, eta); },
              border, border + 16.0 * sigma, qo);
          const auto fn = catphase::integrate_1d(
              [&](double p) { return catphase::homodyne_pdf(p, d0, r, eta); },
              std::sqrt(eta) * d0 - 16.0 * sigma, border, qo);
          const double closed = catphase::squeezed_baseline(d0, r, eta);
          worst = std::max(worst, std::abs(closed - (fp.value + fn.value)));
        }
      }
    }
    check(worst <= 1e-10, "squeezed baseline quadrature",
          "max |closed - integrated| " + io::format_g17(worst));
  }

  {  // Wigner normalization
    double worst = 0.0;
    for (double alpha : {0.0, 1.5, 3.0}) {
      for (double r : {0.0, 0.8}) {
        const auto co = catphase::wigner_coeffs(alpha, r, 0.9, 0.5);
        const auto box = catphase::wigner_box(co);
        const auto res = catphase::integrate_2d(
            [&co](double x, double p) { return wigner_eval(co, x, p); },
            box.x_lo, box.x_hi, box.p_lo, box.p_hi,
            catphase::wigner_quadrature_options(co, 1e-8));
        worst = std::max(worst, std::abs(res.value - 1.0));
      }
    }
    check(worst <= 1e-6, "wigner normalization",
          "max |integral - 1| " + io::format_g17(worst));
  }

  return check.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anti-squeezed cat-state phase-shift detection toolkit"};
  app.set_version_flag("--version", std::string("catphase ") +
                                        catphase::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::map<std::string, std::string> overrides;

  // every config key doubles as a flag (dashes for underscores); flags win
  static const char* keys[] = {
      "alpha", "r", "eta1", "eta2", "delta0", "n_photons", "phi", "engine",
      "dim", "n_stable", "n_max", "threads", "format", "out", "auto_box",
      "x_min", "x_max", "x_count", "p_min", "p_max", "p_count", "r_min",
      "r_max", "r_count", "delta0_min", "delta0_max", "delta0_count",
      "with_numeric", "alpha_min", "alpha_max", "alpha_count", "eta_min",
      "eta_max", "eta_count", "opt_delta0_min", "opt_delta0_max", "opt_r_min",
      "opt_r_max", "coarse_delta0", "coarse_r", "refine_starts", "opt_dim",
      "minima_threshold", "with_baseline", "norm_tol", "quad_abs_tol"};

  const char* subcommands[] = {"wigner",    "negativity", "photon-stats",
                               "detect",    "landscape",  "sweep",
                               "validate"};
  for (const char* name : subcommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "key=value configuration file");
    for (const char* key : keys) {
      std::string flag = "--" + std::string(key);
      for (auto& ch : flag)
        if (ch == '_') ch = '-';
      sub->add_option_function<std::string>(
          flag,
          [&overrides, key](const std::string& value) {
            overrides[key] = value;
          });
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& [key, value] : overrides) cfg.set(key, value);
    cfg.finalize();

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "wigner") return cmd_wigner(cfg);
    if (command == "negativity") return cmd_negativity(cfg);
    if (command == "photon-stats") return cmd_photon_stats(cfg);
    if (command == "detect") return cmd_detect(cfg);
    if (command == "landscape") return cmd_landscape(cfg);
    if (command == "sweep") return cmd_sweep(cfg);
    if (command == "validate") return cmd_validate(cfg);
    std::cerr << "unknown subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "catphase: " << e.what() << "\n";
    return 1;
  }
}
