#include "catphase/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catphase/version.hpp"

namespace catphase::io {

namespace {

using nlohmann::json;

std::string meta_block(const Meta& meta) {
  std::ostringstream os;
  os << "# catphase " << kVersion << "\n";
  for (const auto& [key, value] : meta) os << "# " << key << "=" << value << "\n";
  return os.str();
}

json meta_json(const Meta& meta) {
  json j = json::object();
  for (const auto& [key, value] : meta) j[key] = value;
  return j;
}

json distribution_json_payload(const PhotonDistribution& d) {
  json j;
  j["n_max"] = d.n_max;
  j["probs"] = d.probs;
  j["tail_bound"] = d.tail_bound;
  return j;
}

}  // namespace

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string wigner_grid_csv(const Meta& meta, const std::vector<double>& xs,
                            const std::vector<double>& ps,
                            const std::vector<double>& w_row_major) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "x,p,W\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      os << format_g17(xs[i]) << ',' << format_g17(ps[j]) << ','
         << format_g17(w_row_major[i * ps.size() + j]) << '\n';
  return os.str();
}

std::string distribution_csv(const Meta& meta, const PhotonDistribution& d) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "# tail_bound=" << format_g17(d.tail_bound) << "\n";
  os << "n,p_n\n";
  for (int n = 0; n <= d.n_max; ++n)
    os << n << ',' << format_g17(d.prob_clipped(n)) << '\n';
  return os.str();
}

std::string distributions_json(const Meta& meta,
                               const std::vector<NamedDistribution>& dists,
                               const std::vector<DistancePair>& deltas) {
  json j;
  j["config"] = meta_json(meta);
  json dd = json::object();
  for (const auto& nd : dists)
    dd[nd.engine] = distribution_json_payload(nd.dist);
  j["distributions"] = dd;
  if (!deltas.empty()) {
    json da = json::array();
    for (const auto& pair : deltas) {
      json p;
      p["first"] = pair.first;
      p["second"] = pair.second;
      p["delta"] = pair.delta;
      da.push_back(p);
    }
    j["delta"] = da;
  }
  return j.dump(2) + "\n";
}

std::string error_report_json(const Meta& meta, const ErrorReport& report) {
  json j;
  j["config"] = meta_json(meta);
  json rep;
  rep["p_fp"] = report.p_fp;
  rep["p_fn"] = report.p_fn;
  rep["p_tot"] = report.p_tot;
  if (report.p_sq) rep["p_sq"] = *report.p_sq;
  j["report"] = rep;
  return j.dump(2) + "\n";
}

std::string decision_csv(const Meta& meta, const DecisionRule& rule) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "# tie_count=" << rule.tie_count << "\n";
  os << "n,region\n";
  for (std::size_t n = 0; n < rule.assign.size(); ++n)
    os << n << ','
       << (rule.assign[n] == Region::kNull ? "N0" : "Ndelta") << '\n';
  return os.str();
}

std::string negativity_csv(const Meta& meta,
                           const std::vector<NegativityRow>& rows) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "r,db,v_analytic,valid,margin,v_numeric\n";
  for (const auto& row : rows) {
    os << format_g17(row.r) << ',' << format_g17(row.db) << ','
       << format_g17(row.v_analytic) << ',' << (row.valid ? 1 : 0) << ','
       << format_g17(row.margin) << ',';
    if (row.v_numeric) os << format_g17(*row.v_numeric);
    os << '\n';
  }
  return os.str();
}

std::string landscape_csv(const Meta& meta, const Landscape& l) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "delta0,r,p_tot,valid\n";
  for (std::size_t ri = 0; ri < l.r_grid.size(); ++ri)
    for (std::size_t di = 0; di < l.delta0_grid.size(); ++di)
      os << format_g17(l.delta0_grid[di]) << ',' << format_g17(l.r_grid[ri])
         << ',' << format_g17(l.at(ri, di)) << ','
         << int(l.cell_valid[ri * l.delta0_grid.size() + di]) << '\n';
  return os.str();
}

std::string landscape_minima_csv(const Meta& meta, const Landscape& l) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "delta0,r,p_tot\n";
  for (const auto& m : l.minima)
    os << format_g17(m.delta0) << ',' << format_g17(m.r) << ','
       << format_g17(m.p_tot) << '\n';
  return os.str();
}

std::string landscape_json(const Meta& meta, const Landscape& l) {
  json j;
  j["config"] = meta_json(meta);
  j["delta0_grid"] = l.delta0_grid;
  j["r_grid"] = l.r_grid;
  j["p_tot"] = l.p_tot;
  j["cell_valid"] = l.cell_valid;
  json minima = json::array();
  for (const auto& m : l.minima) {
    json mm;
    mm["delta0"] = m.delta0;
    mm["r"] = m.r;
    mm["p_tot"] = m.p_tot;
    minima.push_back(mm);
  }
  j["minima"] = minima;
  return j.dump(2) + "\n";
}

std::string sweep_csv(const Meta& meta, const std::vector<SweepCell>& cells) {
  std::ostringstream os;
  os << meta_block(meta);
  os << "alpha,eta,delta0_opt,r_opt,p_tot,p_sq,ratio,valid,note\n";
  for (const auto& c : cells) {
    std::string note = c.note;  // keep the row parseable
    for (char& ch : note)
      if (ch == ',' || ch == '\n') ch = ';';
    os << format_g17(c.alpha) << ',' << format_g17(c.eta) << ','
       << format_g17(c.best.delta0) << ',' << format_g17(c.best.r) << ','
       << format_g17(c.best.p_tot) << ',' << format_g17(c.p_sq_at_best) << ','
       << format_g17(c.ratio) << ',' << (c.valid ? 1 : 0) << ',' << note
       << '\n';
  }
  return os.str();
}

std::string sweep_json(const Meta& meta, const std::vector<SweepCell>& cells) {
  json j;
  j["config"] = meta_json(meta);
  json arr = json::array();
  for (const auto& c : cells) {
    json cell;
    cell["alpha"] = c.alpha;
    cell["eta"] = c.eta;
    cell["delta0_opt"] = c.best.delta0;
    cell["r_opt"] = c.best.r;
    cell["p_tot"] = c.best.p_tot;
    cell["method"] = c.best.method_tag;
    cell["p_sq"] = c.p_sq_at_best;
    cell["ratio"] = c.ratio;
    cell["valid"] = c.valid;
    if (!c.note.empty()) cell["note"] = c.note;
    arr.push_back(cell);
  }
  j["cells"] = arr;
  return j.dump(2) + "\n";
}

std::string manifest_json(const std::string& command, const Meta& meta) {
  json j;
  j["tool"] = "catphase";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = meta_json(meta);
  return j.dump(2) + "\n";
}

}  // namespace catphase::io
