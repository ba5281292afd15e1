#pragma once

// Closed-form certificate thresholds: the palette size above which vertex
// colorings avoid repetitive paths, and the largest complete graph whose
// two-coloring certificate (no blue triangle, no red k-clique) goes through.

#include <cmath>
#include <limits>
#include <cstdint>

#include "errors.hpp"

namespace lal {

/**
 * Smallest certified palette size for repetition-free vertex coloring at
 * maximum degree delta:
 *   ceil( delta^2 + 3*2^{-2/3} delta^{5/3} + 2^{2/3} delta^{5/3} / (delta^{1/3} - 2^{1/3}) ).
 * delta <= 2 makes the last denominator vanish or go negative.
 */
inline std::uint64_t nonrep_color_threshold(std::uint64_t delta) {
  if (delta <= 2) fail(errc::degenerate_delta, "threshold needs delta >= 3");
  double d = static_cast<double>(delta);
  double d13 = std::cbrt(d);
  double d53 = d * d13 * d13;  // delta^{5/3}
  double c13 = std::cbrt(2.0);
  double c23 = c13 * c13;
  double value = d * d + 3.0 * d53 / c23 + c23 * d53 / (d13 - c13);
  return static_cast<std::uint64_t>(std::ceil(value));
}

/** The raw (un-ceiled) threshold value, exposed for numeric cross-checks. */
inline double nonrep_color_threshold_raw(std::uint64_t delta) {
  if (delta <= 2) fail(errc::degenerate_delta, "threshold needs delta >= 3");
  double d = static_cast<double>(delta);
  double d13 = std::cbrt(d);
  double d53 = d * d13 * d13;
  double c13 = std::cbrt(2.0);
  double c23 = c13 * c13;
  return d * d + 3.0 * d53 / c23 + c23 * d53 / (d13 - c13);
}

// ---------------------------------------------------------------------------
// Two-coloring certificates for complete graphs.
//
// With x = p*f and y = (1-p)*f the per-edge inequality decouples into
//   h1(x) = x - (n-2) x^3        (blue triangles through an edge)
//   h2(y) = y - C(n-2,k-2) y^E   (red k-cliques; E = C(k,2))
// and certification over (0,1)^2 is h1* + h2* >= 1.

struct ramsey_certificate {
  bool certified = false;
  std::uint32_t n = 0, k = 0;
  double x_star = 0.0, y_star = 0.0;
  double h1 = 0.0, h2 = 0.0;
  double p = 0.0, f = 0.0;            // recovered parameters: p = x/(x+y), f = x+y
  double clique_count = 0.0;          // C(n-2, k-2)
  std::uint32_t clique_edges = 0;     // C(k, 2)
  bool clique_class_empty = false;    // n < k: no red clique events at all
};

inline double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

inline double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  return std::round(std::exp(log_binomial(n, k)));
}

/**
 * Evaluate the decoupled certificate for K_n versus (blue triangles, red
 * K_k). h1 peaks at x* = 1/sqrt(3(n-2)); h2 peaks at y* = (C*E)^{-1/(E-1)}
 * with h2* = y*(1 - 1/E). When the clique class is empty (n < k) the h2
 * supremum is 1, approached as y -> 1; any y with h1* + y >= 1 works and
 * y* = 1 - h1_max/2 is reported.
 */
inline ramsey_certificate ramsey_certify(std::uint32_t k, std::uint32_t n) {
  if (k < 3) fail(errc::invalid_order, "clique order must be at least 3");
  if (n < 3) fail(errc::bad_argument, "need n >= 3");
  ramsey_certificate c;
  c.n = n;
  c.k = k;
  c.clique_edges = k * (k - 1) / 2;
  c.clique_count = binomial(n - 2, k - 2);

  double x = 1.0 / std::sqrt(3.0 * (n - 2));
  c.x_star = x;
  c.h1 = x - (n - 2) * x * x * x;  // = (2/3) x

  if (c.clique_count == 0.0) {
    c.clique_class_empty = true;
    c.h2 = 1.0;  // supremum, not attained
    c.y_star = 1.0 - c.h1 / 2.0;
    c.certified = true;
  } else {
    double e = static_cast<double>(c.clique_edges);
    double log_ce = log_binomial(n - 2, k - 2) + std::log(e);
    double y = std::exp(-log_ce / (e - 1.0));
    c.y_star = y;
    c.h2 = y * (1.0 - 1.0 / e);
    c.certified = c.h1 + c.h2 >= 1.0;
  }
  c.f = c.x_star + c.y_star;
  c.p = c.x_star / c.f;
  return c;
}

/**
 * Largest n whose certificate holds, by increasing scan. For n < k the
 * certificate is trivially true (no clique events); past n = k both peaks
 * shrink monotonically, so the scan stops at the first failure. Returns
 * k - 1 (respectively 2 for k = 3) when no n >= 3 with clique events
 * certifies.
 */
inline std::uint32_t ramsey_max_n(std::uint32_t k) {
  if (k < 3) fail(errc::invalid_order, "clique order must be at least 3");
  std::uint32_t best = k >= 4 ? k - 1 : 2;  // trivial zone: n < k (and n >= 3)
  for (std::uint32_t n = std::max(3u, k);; ++n) {
    if (ramsey_certify(k, n).certified)
      best = n;
    else
      break;
  }
  return best;
}

}  // namespace lal
