#pragma once

// Right-hand sides of the weight inequalities, as formal series in a uniform
// weight f: a constant 1, finitely many monomial terms c*f^e, and geometric
// families sum_{t>=t0} pattern(t) * q^t with q = ratio_coeff * f^step. Closed
// forms are exact inside the radius of convergence; truncated summation backs
// them as an independent oracle.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lal {

struct series_term {
  double coeff = 0.0;
  std::uint32_t exponent = 1;  // power of f
};

struct geometric_family {
  enum class pattern_t { one, linear };  // per-term factor: 1 or t

  double scale = 1.0;        // multiplies the family sum
  double ratio_coeff = 0.0;  // q = ratio_coeff * f^step
  std::uint32_t step = 1;
  std::uint32_t start = 1;  // first index t
  pattern_t pattern = pattern_t::one;

  double ratio_at(double f) const { return ratio_coeff * std::pow(f, static_cast<double>(step)); }

  /** Closed-form sum; +inf outside the radius of convergence. */
  double sum_closed(double f) const {
    double q = ratio_at(f);
    if (q < 0.0) fail(errc::bad_argument, "negative family ratio");
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    double qt0 = std::pow(q, static_cast<double>(start));
    if (pattern == pattern_t::one) return scale * qt0 / (1.0 - q);
    // sum_{t>=t0} t q^t = q^{t0} (t0 - (t0-1) q) / (1-q)^2
    double t0 = static_cast<double>(start);
    return scale * qt0 * (t0 - (t0 - 1.0) * q) / ((1.0 - q) * (1.0 - q));
  }

  /** Term-by-term sum until the tail is below tail_tol (oracle path). */
  double sum_truncated(double f, double tail_tol = 1e-15, std::size_t max_terms = 1 << 22) const {
    double q = ratio_at(f);
    if (q < 0.0) fail(errc::bad_argument, "negative family ratio");
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    double sum = 0.0;
    double qt = std::pow(q, static_cast<double>(start));
    for (std::size_t i = 0; i < max_terms; ++i) {
      double t = static_cast<double>(start + i);
      double term = (pattern == pattern_t::one) ? qt : t * qt;
      sum += term;
      // geometric tail bound; the linear pattern tail is bounded by the next
      // term over (1-q)^2 which the extra factor covers
      double tail = term * q / ((1.0 - q) * (1.0 - q));
      if (tail < tail_tol) break;
      qt *= q;
    }
    return scale * sum;
  }
};

struct series_spec {
  std::vector<series_term> terms;
  std::vector<geometric_family> families;

  /** RHS(f) = 1 + sum of terms + sum of families, closed forms. */
  double rhs(double f) const {
    double s = 1.0;
    for (const auto& t : terms) s += t.coeff * std::pow(f, static_cast<double>(t.exponent));
    for (const auto& g : families) {
      double v = g.sum_closed(f);
      if (std::isinf(v)) return v;
      s += v;
    }
    return s;
  }

  /** RHS via truncated family sums (independent of the closed forms). */
  double rhs_truncated(double f, double tail_tol = 1e-15) const {
    double s = 1.0;
    for (const auto& t : terms) s += t.coeff * std::pow(f, static_cast<double>(t.exponent));
    for (const auto& g : families) {
      double v = g.sum_truncated(f, tail_tol);
      if (std::isinf(v)) return v;
      s += v;
    }
    return s;
  }

  /** Largest f below which every family converges (scan cap otherwise). */
  double domain_sup(double cap = 1e6) const {
    double hi = cap;
    for (const auto& g : families) {
      if (g.ratio_coeff <= 0.0) continue;
      double edge = std::pow(1.0 / g.ratio_coeff, 1.0 / static_cast<double>(g.step));
      hi = std::min(hi, edge);
    }
    return hi;
  }
};

struct fixpoint_result {
  bool feasible = false;
  double best_f = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();  // best_f - RHS(best_f)
};

/**
 * Smallest f in [1, 1e6] with f >= RHS(f), within tolerance. g(f) = f - RHS(f)
 * is concave (all series coefficients are non-negative), so locate its max by
 * golden-section and the first crossing by bisection; a tangency (max ~ 0) is
 * itself the answer. The result satisfies residual in [-1e-9, 1e-6] and no
 * f < best_f*(1-1e-6) is feasible.
 */
inline fixpoint_result solve_series_fixpoint(const series_spec& spec, double tol = 1e-9) {
  const double lo_edge = 1.0;
  double hi_edge = spec.domain_sup(1e6);
  auto g = [&](double f) {
    double r = spec.rhs(f);
    if (std::isinf(r)) return -std::numeric_limits<double>::infinity();
    return f - r;
  };
  if (hi_edge <= lo_edge) return {};  // diverges before f=1: nothing can satisfy f >= RHS >= 1

  // shrink away from the divergence edge
  double hi = hi_edge - 1e-12 * std::max(1.0, hi_edge);

  // golden-section maximum of the concave g on [lo_edge, hi]
  const double phi = 0.6180339887498949;
  double a = lo_edge, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double g1 = g(x1), g2 = g(x2);
  for (int i = 0; i < 200 && (b - a) > 1e-13 * std::max(1.0, b); ++i) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + phi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - phi * (b - a);
      g1 = g(x1);
    }
  }
  double fm = 0.5 * (a + b);
  double gm = g(fm);
  // endpoints can beat the interior for monotone g
  if (g(lo_edge) > gm) {
    fm = lo_edge;
    gm = g(lo_edge);
  }
  if (g(hi) > gm) {
    fm = hi;
    gm = g(hi);
  }

  if (gm < -tol) return {};  // infeasible

  if (g(lo_edge) >= 0.0) return {true, lo_edge, g(lo_edge)};
  if (gm <= 0.0) return {true, fm, gm};  // tangency

  // first crossing: g(lo_edge) < 0 <= g(fm)
  double lo = lo_edge, cr = fm;
  for (int i = 0; i < 200 && (cr - lo) > 1e-13 * std::max(1.0, cr); ++i) {
    double mid = 0.5 * (lo + cr);
    if (g(mid) >= 0.0)
      cr = mid;
    else
      lo = mid;
  }
  return {true, cr, g(cr)};
}

}  // namespace lal
