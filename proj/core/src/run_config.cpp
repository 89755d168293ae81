#include "catphase/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace catphase {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key +
                                "' expects a number, got '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: key '" + key +
                                "' expects a number, got '" + value + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw std::invalid_argument("config: key '" + key +
                                "' expects an integer, got '" + value + "'");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on")
    return true;
  if (value == "false" || value == "0" || value == "no" || value == "off")
    return false;
  throw std::invalid_argument("config: key '" + key +
                              "' expects a boolean, got '" + value + "'");
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_value(int v) { return std::to_string(v); }
std::string format_value(bool v) { return v ? "true" : "false"; }
std::string format_value(const std::string& v) { return v; }

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  const auto d = [&] { return parse_double(key, v); };
  const auto i = [&] { return parse_int(key, v); };
  const auto b = [&] { return parse_bool(key, v); };

  if (key == "alpha") alpha = d();
  else if (key == "r") r = d();
  else if (key == "eta1") eta1 = d();
  else if (key == "eta2") eta2 = d();
  else if (key == "delta0") { delta0 = d(); delta0_given = true; }
  else if (key == "n_photons") n_photons = d();
  else if (key == "phi") phi = d();
  else if (key == "engine") engine = v;
  else if (key == "dim") dim = i();
  else if (key == "n_stable") n_stable = i();
  else if (key == "n_max") n_max = i();
  else if (key == "threads") threads = i();
  else if (key == "format") format = v;
  else if (key == "out") out = v;
  else if (key == "auto_box") auto_box = b();
  else if (key == "x_min") x_min = d();
  else if (key == "x_max") x_max = d();
  else if (key == "x_count") x_count = i();
  else if (key == "p_min") p_min = d();
  else if (key == "p_max") p_max = d();
  else if (key == "p_count") p_count = i();
  else if (key == "r_min") r_min = d();
  else if (key == "r_max") r_max = d();
  else if (key == "r_count") r_count = i();
  else if (key == "delta0_min") delta0_min = d();
  else if (key == "delta0_max") delta0_max = d();
  else if (key == "delta0_count") delta0_count = i();
  else if (key == "with_numeric") with_numeric = b();
  else if (key == "alpha_min") alpha_min = d();
  else if (key == "alpha_max") alpha_max = d();
  else if (key == "alpha_count") alpha_count = i();
  else if (key == "eta_min") eta_min = d();
  else if (key == "eta_max") eta_max = d();
  else if (key == "eta_count") eta_count = i();
  else if (key == "opt_delta0_min") opt_delta0_min = d();
  else if (key == "opt_delta0_max") opt_delta0_max = d();
  else if (key == "opt_r_min") opt_r_min = d();
  else if (key == "opt_r_max") opt_r_max = d();
  else if (key == "coarse_delta0") coarse_delta0 = i();
  else if (key == "coarse_r") coarse_r = i();
  else if (key == "refine_starts") refine_starts = i();
  else if (key == "opt_dim") opt_dim = i();
  else if (key == "minima_threshold") minima_threshold = d();
  else if (key == "with_baseline") with_baseline = b();
  else if (key == "norm_tol") norm_tol = d();
  else if (key == "quad_abs_tol") quad_abs_tol = d();
  else
    throw std::invalid_argument("config: unknown key '" + key + "'");
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("config: cannot open file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " of '" + path + "' is not key = value");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::finalize() {
  if (n_photons.has_value() != phi.has_value())
    throw std::invalid_argument(
        "config: n_photons and phi must be given together");
  if (n_photons) {
    if (*n_photons < 0.0)
      throw std::invalid_argument("config: n_photons must be >= 0");
    const double derived = std::sqrt(*n_photons) * *phi;
    if (delta0_given &&
        std::abs(derived - delta0) > 1e-9 * std::max(1.0, std::abs(derived)))
      throw std::invalid_argument(
          "config: delta0 conflicts with sqrt(n_photons) * phi");
    delta0 = derived;
  }
  if (!(alpha >= 0.0)) throw std::invalid_argument("config: alpha must be >= 0");
  if (!(eta1 > 0.0 && eta1 <= 1.0))
    throw std::invalid_argument("config: eta1 must lie in (0, 1]");
  if (!(eta2 > 0.0 && eta2 <= 1.0))
    throw std::invalid_argument("config: eta2 must lie in (0, 1]");
  if (!(delta0 >= 0.0))
    throw std::invalid_argument("config: delta0 must be >= 0");
  if (engine != "closed" && engine != "quadrature" &&
      engine != "combinatorial" && engine != "all")
    throw std::invalid_argument(
        "config: engine must be closed|quadrature|combinatorial|all");
  if (format != "csv" && format != "json")
    throw std::invalid_argument("config: format must be csv|json");
  if (dim < 8) throw std::invalid_argument("config: dim must be >= 8");
  if (n_stable < 0) throw std::invalid_argument("config: n_stable must be >= 0");
  if (n_max < 0) throw std::invalid_argument("config: n_max must be >= 0");
  if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
  if (x_count < 2 || p_count < 2)
    throw std::invalid_argument("config: grid counts must be >= 2");
  if (r_count < 1 || delta0_count < 1 || alpha_count < 1 || eta_count < 1)
    throw std::invalid_argument("config: grid counts must be >= 1");
  if (coarse_delta0 < 2 || coarse_r < 2)
    throw std::invalid_argument("config: coarse grid counts must be >= 2");
  if (refine_starts < 1)
    throw std::invalid_argument("config: refine_starts must be >= 1");
  if (opt_dim < 8) throw std::invalid_argument("config: opt_dim must be >= 8");
  if (!(norm_tol > 0.0) || !(quad_abs_tol > 0.0))
    throw std::invalid_argument("config: tolerances must be > 0");
  if (!(r_min <= r_max) || !(delta0_min <= delta0_max) ||
      !(alpha_min <= alpha_max) || !(eta_min <= eta_max) ||
      !(opt_delta0_min <= opt_delta0_max) || !(opt_r_min <= opt_r_max) ||
      !(x_min < x_max) || !(p_min < p_max))
    throw std::invalid_argument("config: grid bounds must be ordered");
  if (!(eta_min > 0.0) || !(eta_max <= 1.0))
    throw std::invalid_argument("config: eta grid must lie in (0, 1]");
}

std::vector<std::pair<std::string, std::string>> RunConfig::to_pairs() const {
  std::vector<std::pair<std::string, std::string>> kv;
  const auto add = [&kv](const char* key, const auto& value) {
    kv.emplace_back(key, format_value(value));
  };
  add("alpha", alpha);
  add("r", r);
  add("eta1", eta1);
  add("eta2", eta2);
  add("delta0", delta0);
  if (n_photons) add("n_photons", *n_photons);
  if (phi) add("phi", *phi);
  add("engine", engine);
  add("dim", dim);
  add("n_stable", n_stable);
  add("n_max", n_max);
  // `threads` and `out` are execution knobs, not part of the computation:
  // leaving them out keeps output bytes identical across worker counts and
  // target directories
  add("format", format);
  add("auto_box", auto_box);
  add("x_min", x_min);
  add("x_max", x_max);
  add("x_count", x_count);
  add("p_min", p_min);
  add("p_max", p_max);
  add("p_count", p_count);
  add("r_min", r_min);
  add("r_max", r_max);
  add("r_count", r_count);
  add("delta0_min", delta0_min);
  add("delta0_max", delta0_max);
  add("delta0_count", delta0_count);
  add("with_numeric", with_numeric);
  add("alpha_min", alpha_min);
  add("alpha_max", alpha_max);
  add("alpha_count", alpha_count);
  add("eta_min", eta_min);
  add("eta_max", eta_max);
  add("eta_count", eta_count);
  add("opt_delta0_min", opt_delta0_min);
  add("opt_delta0_max", opt_delta0_max);
  add("opt_r_min", opt_r_min);
  add("opt_r_max", opt_r_max);
  add("coarse_delta0", coarse_delta0);
  add("coarse_r", coarse_r);
  add("refine_starts", refine_starts);
  add("opt_dim", opt_dim);
  add("minima_threshold", minima_threshold);
  add("with_baseline", with_baseline);
  add("norm_tol", norm_tol);
  add("quad_abs_tol", quad_abs_tol);
  return kv;
}

}  // namespace catphase
