#include "catphase/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "catphase/detection.hpp"
#include "catphase/fock.hpp"

namespace catphase {

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be >= 1");
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * i / (count - 1);
  return v;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CATPHASE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(std::min<long>(v, 256));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// Results land in index-addressed slots, so output bytes do not depend on
// scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// The search box reaches r = 1.7 where the squeezed tail is long; the
// truncation defect is carried into tail_bound (error_probs counts it
// conservatively), and only a defect past 1e-3 invalidates the cell.
constexpr double kCellNormTol = 1e-3;

PhotonDistribution loss_distribution(
    const std::vector<std::complex<double>>& working, double eta,
    double norm_tol) {
  const FockStateVector state = finalize_state(working, norm_tol);
  PhotonDistribution d;
  d.probs.resize(state.dim);
  for (int n = 0; n < state.dim; ++n) d.probs[n] = std::norm(state.amps[n]);
  d.n_max = state.dim - 1;
  d.tail_bound = std::max(0.0, state.norm_defect);
  return binomial_loss(d, eta);
}

// Shares the squeezed cat across displacement values.
struct HypothesisCache {
  double alpha, eta;
  int dim;
  double r = -1.0;
  bool have = false;
  std::vector<std::complex<double>> squeezed;
  PhotonDistribution p0;

  HypothesisCache(double a, double e, int d) : alpha(a), eta(e), dim(d) {}

  void set_r(double new_r) {
    if (have && new_r == r) return;
    r = new_r;
    squeezed = coherent_cat_amplitudes(alpha, dim);
    apply_squeeze(squeezed, r);
    p0 = loss_distribution(squeezed, eta, kCellNormTol);
    have = true;
  }

  double p_tot(double delta0) {
    std::vector<std::complex<double>> psi = squeezed;
    apply_displacement(psi, delta0);
    const PhotonDistribution pd = loss_distribution(psi, eta, kCellNormTol);
    const DecisionRule rule = ml_partition(p0, pd);
    return error_probs(rule, p0, pd).p_tot;
  }
};

}  // namespace

double total_error(double alpha, double eta, double delta0, double r,
                   int fock_dim) {
  HypothesisCache cache(alpha, eta, fock_dim);
  cache.set_r(r);
  return cache.p_tot(delta0);
}

Landscape landscape(double alpha, double eta,
                    const std::vector<double>& delta0_grid,
                    const std::vector<double>& r_grid,
                    const OptimizeOptions& opts) {
  if (delta0_grid.empty() || r_grid.empty())
    throw std::invalid_argument("landscape: grids must be non-empty");
  if (!std::is_sorted(delta0_grid.begin(), delta0_grid.end()) ||
      !std::is_sorted(r_grid.begin(), r_grid.end()))
    throw std::invalid_argument("landscape: grids must be monotone");

  Landscape l;
  l.delta0_grid = delta0_grid;
  l.r_grid = r_grid;
  const std::size_t nd = delta0_grid.size();
  const std::size_t nr = r_grid.size();
  l.p_tot.assign(nd * nr, 1.0);
  l.cell_valid.assign(nd * nr, 1);

  const int threads = resolve_threads(opts.threads);
  parallel_for(static_cast<int>(nr), threads, [&](int ri) {
    HypothesisCache cache(alpha, eta, opts.fock_dim);
    try {
      cache.set_r(r_grid[ri]);
    } catch (const std::exception&) {
      for (std::size_t di = 0; di < nd; ++di) l.cell_valid[ri * nd + di] = 0;
      return;
    }
    for (std::size_t di = 0; di < nd; ++di) {
      try {
        l.p_tot[ri * nd + di] = cache.p_tot(delta0_grid[di]);
      } catch (const std::exception&) {
        l.cell_valid[ri * nd + di] = 0;  // cell marked invalid, sweep goes on
      }
    }
  });

  // grid-local minima (8-neighborhood) below the threshold
  for (std::size_t ri = 0; ri < nr; ++ri) {
    for (std::size_t di = 0; di < nd; ++di) {
      if (!l.cell_valid[ri * nd + di]) continue;
      const double v = l.at(ri, di);
      if (v >= opts.minima_threshold) continue;
      bool is_min = true;
      for (int dr = -1; dr <= 1 && is_min; ++dr) {
        for (int dd = -1; dd <= 1; ++dd) {
          if (dr == 0 && dd == 0) continue;
          const long r2 = static_cast<long>(ri) + dr;
          const long d2 = static_cast<long>(di) + dd;
          if (r2 < 0 || d2 < 0 || r2 >= static_cast<long>(nr) ||
              d2 >= static_cast<long>(nd))
            continue;
          if (l.cell_valid[r2 * nd + d2] && l.at(r2, d2) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min)
        l.minima.push_back({delta0_grid[di], r_grid[ri], v});
    }
  }
  std::sort(l.minima.begin(), l.minima.end(),
            [](const LandscapeMinimum& a, const LandscapeMinimum& b) {
              if (a.p_tot != b.p_tot) return a.p_tot < b.p_tot;
              if (a.delta0 != b.delta0) return a.delta0 < b.delta0;
              return a.r < b.r;
            });
  return l;
}

namespace {

struct SimplexPoint {
  double d0, r, f;
};

// Derivative-free local refinement; p_tot is piecewise-smooth in
// (delta0, r) but kinks where the ML partition changes, so Nelder-Mead is
// the right tool.  Candidates are clamped into the bounds.
SimplexPoint nelder_mead(HypothesisCache& cache, double d0, double r,
                         const OptimizeOptions& opts) {
  const auto clamp_point = [&opts](double& x, double& y) {
    x = std::clamp(x, opts.delta0_lo, opts.delta0_hi);
    y = std::clamp(y, opts.r_lo, opts.r_hi);
  };
  const auto eval = [&](double x, double y) {
    clamp_point(x, y);
    cache.set_r(y);
    return cache.p_tot(x);
  };

  const double h_d = std::max(0.02, 0.05 * (opts.delta0_hi - opts.delta0_lo));
  const double h_r = std::max(0.02, 0.05 * (opts.r_hi - opts.r_lo));
  SimplexPoint simplex[3] = {
      {d0, r, eval(d0, r)},
      {d0 + h_d, r, 0.0},
      {d0, r + h_r, 0.0},
  };
  clamp_point(simplex[1].d0, simplex[1].r);
  clamp_point(simplex[2].d0, simplex[2].r);
  simplex[1].f = eval(simplex[1].d0, simplex[1].r);
  simplex[2].f = eval(simplex[2].d0, simplex[2].r);

  const auto order = [&simplex]() {
    std::sort(std::begin(simplex), std::end(simplex),
              [](const SimplexPoint& a, const SimplexPoint& b) {
                if (a.f != b.f) return a.f < b.f;
                if (a.d0 != b.d0) return a.d0 < b.d0;
                return a.r < b.r;
              });
  };

  for (int it = 0; it < opts.simplex_max_iter; ++it) {
    order();
    if (std::abs(simplex[2].f - simplex[0].f) < opts.simplex_tol) break;
    const double cd = 0.5 * (simplex[0].d0 + simplex[1].d0);
    const double cr = 0.5 * (simplex[0].r + simplex[1].r);
    double rd = cd + (cd - simplex[2].d0);
    double rr = cr + (cr - simplex[2].r);
    clamp_point(rd, rr);
    const double fr = eval(rd, rr);
    if (fr < simplex[0].f) {
      double ed = cd + 2.0 * (cd - simplex[2].d0);
      double er = cr + 2.0 * (cr - simplex[2].r);
      clamp_point(ed, er);
      const double fe = eval(ed, er);
      simplex[2] = (fe < fr) ? SimplexPoint{ed, er, fe}
                             : SimplexPoint{rd, rr, fr};
    } else if (fr < simplex[1].f) {
      simplex[2] = {rd, rr, fr};
    } else {
      double kd = cd + 0.5 * (simplex[2].d0 - cd);
      double kr = cr + 0.5 * (simplex[2].r - cr);
      clamp_point(kd, kr);
      const double fk = eval(kd, kr);
      if (fk < simplex[2].f) {
        simplex[2] = {kd, kr, fk};
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          simplex[i].d0 = simplex[0].d0 + 0.5 * (simplex[i].d0 - simplex[0].d0);
          simplex[i].r = simplex[0].r + 0.5 * (simplex[i].r - simplex[0].r);
          simplex[i].f = eval(simplex[i].d0, simplex[i].r);
        }
      }
    }
  }
  order();
  return simplex[0];
}

}  // namespace

OperatingPoint optimize_point(double alpha, double eta,
                              const OptimizeOptions& opts) {
  const std::vector<double> d_grid =
      linspace(opts.delta0_lo, opts.delta0_hi, opts.coarse_delta0);
  const std::vector<double> r_grid =
      linspace(opts.r_lo, opts.r_hi, opts.coarse_r);
  const Landscape coarse = landscape(alpha, eta, d_grid, r_grid, opts);

  struct Cell {
    double f, d0, r;
  };
  std::vector<Cell> cells;
  cells.reserve(coarse.p_tot.size());
  for (std::size_t ri = 0; ri < r_grid.size(); ++ri)
    for (std::size_t di = 0; di < d_grid.size(); ++di)
      if (coarse.cell_valid[ri * d_grid.size() + di])
        cells.push_back({coarse.at(ri, di), d_grid[di], r_grid[ri]});
  if (cells.empty())
    throw std::runtime_error("optimize_point: every coarse cell failed");
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.f != b.f) return a.f < b.f;
    if (a.d0 != b.d0) return a.d0 < b.d0;
    return a.r < b.r;
  });

  // never worse than the best coarse cell
  SimplexPoint best{cells[0].d0, cells[0].r, cells[0].f};
  HypothesisCache cache(alpha, eta, opts.fock_dim);
  const int starts = std::min<std::size_t>(opts.refine_starts, cells.size());
  for (int k = 0; k < starts; ++k) {
    const SimplexPoint refined =
        nelder_mead(cache, cells[k].d0, cells[k].r, opts);
    if (refined.f < best.f) best = refined;
  }

  OperatingPoint point;
  point.delta0 = best.d0;
  point.r = best.r;
  point.p_tot = best.f;
  point.method_tag = "combinatorial";
  return point;
}

std::vector<SweepCell> sweep(const std::vector<double>& alpha_grid,
                             const std::vector<double>& eta_grid,
                             const OptimizeOptions& opts) {
  const int n_cells = static_cast<int>(alpha_grid.size() * eta_grid.size());
  std::vector<SweepCell> cells(n_cells);
  const int threads = resolve_threads(opts.threads);
  OptimizeOptions cell_opts = opts;
  cell_opts.threads = 1;  // no nested pools
  parallel_for(n_cells, threads, [&](int idx) {
    const double alpha = alpha_grid[idx / eta_grid.size()];
    const double eta = eta_grid[idx % eta_grid.size()];
    SweepCell& cell = cells[idx];
    cell.alpha = alpha;
    cell.eta = eta;
    try {
      cell.best = optimize_point(alpha, eta, cell_opts);
      cell.p_sq_at_best =
          squeezed_baseline(cell.best.delta0, std::abs(cell.best.r), eta);
      if (cell.p_sq_at_best > 0.0) {
        cell.ratio = std::min(cell.best.p_tot / cell.p_sq_at_best, 1.0);
      } else {
        cell.ratio = 1.0;  // baseline underflowed: cat cannot do better
      }
    } catch (const std::exception& e) {
      cell.valid = false;
      cell.note = e.what();
    }
  });
  return cells;
}

}  // namespace catphase
