#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Resolved run configuration shared by every CLI subcommand.  A run is
// described by one flat key=value config file plus command-line overrides
// (overrides win).  Unknown keys are rejected.  The full resolved
// configuration is echoed into every output header/manifest so any output
// can be reproduced exactly.

namespace catphase {

struct RunConfig {
  // probe
  double alpha = 2.0;
  double r = 0.56;
  double eta1 = 1.0;
  double eta2 = 0.975;
  double delta0 = 0.68;
  std::optional<double> n_photons;  // with phi: delta0 = sqrt(N) * phi
  std::optional<double> phi;
  bool delta0_given = false;

  // engines and truncation
  std::string engine = "combinatorial";  // closed|quadrature|combinatorial|all
  int dim = 64;
  int n_stable = 23;
  int n_max = 23;
  int threads = 0;

  // output
  std::string format = "csv";  // csv|json
  std::string out = ".";

  // wigner grid (auto_box derives x/p ranges from the coefficients)
  bool auto_box = true;
  double x_min = -6.0, x_max = 6.0;
  int x_count = 121;
  double p_min = -6.0, p_max = 6.0;
  int p_count = 241;

  // negativity / landscape grids
  double r_min = 0.0, r_max = 1.7;
  int r_count = 35;
  double delta0_min = 0.0, delta0_max = 3.0;
  int delta0_count = 61;
  bool with_numeric = true;  // negativity: also run the quadrature referee

  // sweep grids
  double alpha_min = 1.5, alpha_max = 3.0;
  int alpha_count = 16;
  double eta_min = 0.95, eta_max = 1.0;
  int eta_count = 11;

  // operating-point search window (the reported optima live inside
  // delta0 <= 1.2; larger displacements separate the hypotheses trivially)
  double opt_delta0_min = 0.0, opt_delta0_max = 1.2;
  double opt_r_min = 0.0, opt_r_max = 1.7;
  int coarse_delta0 = 25, coarse_r = 18;
  int refine_starts = 5;
  double minima_threshold = 0.9;
  int opt_dim = 128;  // Fock truncation for the search engine (r reaches 1.7)

  // detection / tolerances
  bool with_baseline = true;
  double norm_tol = 1e-10;
  double quad_abs_tol = 1e-9;

  // Assign one key.  Throws std::invalid_argument for unknown keys or
  // unparseable values.
  void set(const std::string& key, const std::string& value);

  // Parse `key = value` lines ('#' comments, blank lines allowed).
  void load_file(const std::string& path);

  // Resolve delta0 from (n_photons, phi) and check all ranges; throws
  // std::invalid_argument on violations.
  void finalize();

  // Every key with its resolved value, in a fixed order.
  std::vector<std::pair<std::string, std::string>> to_pairs() const;
};

}  // namespace catphase
