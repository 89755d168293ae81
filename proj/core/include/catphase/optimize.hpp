#pragma once

#include <string>
#include <vector>

#include "catphase/photon_statistics.hpp"

// Operating-point search over (delta0, r) and sweeps over (alpha, eta).
// The engine is pn_combinatorial under the single-loss-after-displacement
// convention (eta1 = 1, eta2 = eta).  All outputs are deterministic for a
// fixed configuration regardless of thread count: cells are independent
// work units written into index-addressed slots.

namespace catphase {

struct OperatingPoint {
  double delta0 = 0.0;
  double r = 0.0;
  double p_tot = 1.0;
  std::string method_tag = "combinatorial";
};

struct OptimizeOptions {
  double delta0_lo = 0.0, delta0_hi = 3.0;
  double r_lo = 0.0, r_hi = 1.7;
  int coarse_delta0 = 25;
  int coarse_r = 18;
  int refine_starts = 5;        // simplex restarts from the best K cells
  int simplex_max_iter = 160;
  double simplex_tol = 1e-6;    // f-spread convergence
  // Wider than kDefaultFockDim: the r bound admits squeezed states whose
  // photon tails need ~100 levels before the truncation defect is small.
  int fock_dim = 128;
  int threads = 0;              // 0: CATPHASE_THREADS env, else hardware
  double minima_threshold = 0.9;
};

// ML total error for hypothesis delta0 = 0 vs the given delta0.
double total_error(double alpha, double eta, double delta0, double r,
                   int fock_dim = kDefaultFockDim);

struct LandscapeMinimum {
  double delta0, r, p_tot;
};

struct Landscape {
  std::vector<double> delta0_grid;
  std::vector<double> r_grid;
  // row-major: p_tot[ri * delta0_grid.size() + di]
  std::vector<double> p_tot;
  std::vector<std::uint8_t> cell_valid;
  std::vector<LandscapeMinimum> minima;  // grid-local minima below threshold

  double at(std::size_t ri, std::size_t di) const {
    return p_tot[ri * delta0_grid.size() + di];
  }
};

// Full p_tot matrix over the given grids; failing cells are marked invalid
// without aborting the sweep.
Landscape landscape(double alpha, double eta,
                    const std::vector<double>& delta0_grid,
                    const std::vector<double>& r_grid,
                    const OptimizeOptions& opts = {});

// Coarse grid scan followed by Nelder-Mead refinement from the best
// refine_starts cells.  Never returns a value worse than the best coarse
// cell.  Deterministic.
OperatingPoint optimize_point(double alpha, double eta,
                              const OptimizeOptions& opts = {});

struct SweepCell {
  double alpha = 0.0;
  double eta = 1.0;
  OperatingPoint best;
  double p_sq_at_best = 1.0;  // baseline at (delta0*, |r*|, eta)
  double ratio = 1.0;         // min(p_tot / p_sq, 1)
  bool valid = true;
  std::string note;
};

std::vector<SweepCell> sweep(const std::vector<double>& alpha_grid,
                             const std::vector<double>& eta_grid,
                             const OptimizeOptions& opts = {});

// Thread-count resolution: requested > 0 wins, else CATPHASE_THREADS, else
// hardware concurrency.
int resolve_threads(int requested);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace catphase
