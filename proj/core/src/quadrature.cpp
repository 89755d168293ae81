#include "catphase/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <numbers>
#include <stdexcept>

namespace catphase {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;  // ascending order
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static const GaussLegendreRule rule8 = compute_rule(8);
  static const GaussLegendreRule rule16 = compute_rule(16);
  if (n == 8) return rule8;
  if (n == 16) return rule16;
  throw std::invalid_argument("gauss_legendre: only 8- and 16-point rules are cached");
}

namespace {

struct Budget {
  long panels_left;
  bool exhausted = false;
};

double panel_1d(const std::function<double(double)>& f, double a, double b,
                const GaussLegendreRule& rule, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(c + h * rule.nodes[i]);
  evals += static_cast<long>(rule.nodes.size());
  return sum * h;
}

void adapt_1d(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, const QuadratureOptions& opts,
              QuadratureResult& out, Budget& budget) {
  if (budget.panels_left-- <= 0) {
    budget.exhausted = true;
    const double q16 = panel_1d(f, a, b, gauss_legendre(16), out.evaluations);
    out.value += q16;
    out.error += std::abs(b - a);  // pessimistic: no estimate available
    return;
  }
  const double q16 = panel_1d(f, a, b, gauss_legendre(16), out.evaluations);
  const double q8 = panel_1d(f, a, b, gauss_legendre(8), out.evaluations);
  const double err = std::abs(q16 - q8);
  if (err <= tol || depth >= opts.max_depth) {
    out.value += q16;
    out.error += err;
    if (err > tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt_1d(f, a, mid, 0.5 * tol, depth + 1, opts, out, budget);
  adapt_1d(f, mid, b, 0.5 * tol, depth + 1, opts, out, budget);
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a,
                              double b, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) return out;
  const double width = b - a;
  int n0 = 1;
  if (opts.max_panel_x > 0.0)
    n0 = std::max(1, static_cast<int>(std::ceil(std::abs(width) / opts.max_panel_x)));
  Budget budget{opts.max_panels};
  const double tol =
      std::max(opts.abs_tol, 0.0);  // rel_tol applied as a final check below
  for (int i = 0; i < n0; ++i) {
    const double pa = a + width * i / n0;
    const double pb = a + width * (i + 1) / n0;
    adapt_1d(f, pa, pb, tol / n0, 0, opts, out, budget);
  }
  if (budget.exhausted) out.converged = false;
  if (out.error > std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value)))
    out.converged = false;
  return out;
}

namespace {

double panel_2d(const std::function<double(double, double)>& f, double ax,
                double bx, double ay, double by, const GaussLegendreRule& rule,
                long& evals) {
  const double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = cx + hx * rule.nodes[i];
    double row = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      row += rule.weights[j] * f(x, cy + hy * rule.nodes[j]);
    sum += rule.weights[i] * row;
  }
  evals += static_cast<long>(rule.nodes.size() * rule.nodes.size());
  return sum * hx * hy;
}

struct Panel2D {
  double ax, bx, ay, by;
  double value, err;
  int depth;
};

// worst error first; coordinate tie-break keeps the refinement order (and
// hence the result bytes) deterministic
struct PanelWorse {
  bool operator()(const Panel2D& a, const Panel2D& b) const {
    if (a.err != b.err) return a.err < b.err;
    if (a.ax != b.ax) return a.ax < b.ax;
    if (a.ay != b.ay) return a.ay < b.ay;
    if (a.bx != b.bx) return a.bx < b.bx;
    return a.by < b.by;
  }
};

std::vector<double> panel_edges(double lo, double hi, double cap,
                                double anchor) {
  std::vector<double> edges;
  edges.push_back(lo);
  if (cap > 0.0 && hi - lo > cap) {
    if (std::isfinite(anchor)) {
      // boundaries on anchor + k*cap, clipped to [lo, hi]
      const long k_lo = static_cast<long>(std::floor((lo - anchor) / cap)) + 1;
      for (long k = k_lo; anchor + k * cap < hi; ++k) {
        const double e = anchor + k * cap;
        if (e > lo) edges.push_back(e);
      }
    } else {
      const int n = static_cast<int>(std::ceil((hi - lo) / cap));
      for (int i = 1; i < n; ++i) edges.push_back(lo + (hi - lo) * i / n);
    }
  }
  edges.push_back(hi);
  return edges;
}

}  // namespace

// Global-tolerance refinement: panels live in a worst-first queue and the
// worst one is split until the summed error estimate meets the target.
// Per-panel tolerance shares would over-refine the few panels that straddle
// |W| kink lines; the global budget spends effort only where it pays.
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              double x_lo, double x_hi, double p_lo,
                              double p_hi, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (x_lo >= x_hi || p_lo >= p_hi) return out;

  const std::vector<double> x_edges =
      panel_edges(x_lo, x_hi, opts.max_panel_x,
                  std::numeric_limits<double>::quiet_NaN());
  const std::vector<double> p_edges =
      panel_edges(p_lo, p_hi, opts.max_panel_y, opts.seed_anchor_y);

  const auto measure = [&](double ax, double bx, double ay,
                           double by, int depth) {
    Panel2D panel{ax, bx, ay, by, 0.0, 0.0, depth};
    panel.value = panel_2d(f, ax, bx, ay, by, gauss_legendre(16),
                           out.evaluations);
    const double q8 =
        panel_2d(f, ax, bx, ay, by, gauss_legendre(8), out.evaluations);
    panel.err = std::abs(panel.value - q8);
    return panel;
  };

  std::priority_queue<Panel2D, std::vector<Panel2D>, PanelWorse> queue;
  double queue_err = 0.0, queued_value = 0.0;
  double settled_value = 0.0, settled_err = 0.0;
  for (std::size_t i = 0; i + 1 < x_edges.size(); ++i) {
    for (std::size_t j = 0; j + 1 < p_edges.size(); ++j) {
      Panel2D panel =
          measure(x_edges[i], x_edges[i + 1], p_edges[j], p_edges[j + 1], 0);
      queue_err += panel.err;
      queued_value += panel.value;
      queue.push(panel);
    }
  }

  long panels_used = static_cast<long>(queue.size());
  const auto target = [&](double value_estimate) {
    return std::max(opts.abs_tol, opts.rel_tol * std::abs(value_estimate));
  };

  while (!queue.empty()) {
    if (queue_err + settled_err <= target(settled_value + queued_value)) break;
    if (panels_used >= opts.max_panels) {
      out.converged = false;
      break;
    }
    Panel2D worst = queue.top();
    queue.pop();
    queue_err -= worst.err;
    queued_value -= worst.value;
    if (worst.depth >= opts.max_depth) {
      settled_value += worst.value;
      settled_err += worst.err;
      out.converged = false;
      continue;
    }
    // split the axis with the larger width (relative to its cap when set)
    const double wx = worst.bx - worst.ax;
    const double wy = worst.by - worst.ay;
    const double sx = opts.max_panel_x > 0 ? wx / opts.max_panel_x : wx;
    const double sy = opts.max_panel_y > 0 ? wy / opts.max_panel_y : wy;
    Panel2D a, b;
    if (sx >= sy) {
      const double mid = 0.5 * (worst.ax + worst.bx);
      a = measure(worst.ax, mid, worst.ay, worst.by, worst.depth + 1);
      b = measure(mid, worst.bx, worst.ay, worst.by, worst.depth + 1);
    } else {
      const double mid = 0.5 * (worst.ay + worst.by);
      a = measure(worst.ax, worst.bx, worst.ay, mid, worst.depth + 1);
      b = measure(worst.ax, worst.bx, mid, worst.by, worst.depth + 1);
    }
    queue_err += a.err + b.err;
    queued_value += a.value + b.value;
    queue.push(a);
    queue.push(b);
    panels_used += 2;
  }

  // drain in deterministic (queue) order
  out.value = settled_value;
  out.error = settled_err + queue_err;
  while (!queue.empty()) {
    out.value += queue.top().value;
    queue.pop();
  }
  if (out.error > target(out.value)) out.converged = false;
  return out;
}

}  // namespace catphase
