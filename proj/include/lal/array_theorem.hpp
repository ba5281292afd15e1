#pragma once

// Normalized-array inequality and its sequence corollary. An array a_{ij}
// (i,j >= 1, finite support, non-negative, positive total) normalizes to
//   b_{ij} = a_{ij} / sum_k sum_{l <= i+j-1} a_{kl}
// and then 1 + sum_i (sup_j b_{ij}) x^i > x for every x > 0. The corollary:
// for a non-negative sequence with positive total and window k,
//   sup_j a_j / sum_{i <= j+k-1} a_i > 1/(e k).

#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace lal {

struct array_check_sample {
  double x = 0.0;
  double lhs = 0.0;  // 1 + sum_i (sup_j b_ij) x^i
  bool holds = false;
};

struct array_check_result {
  std::vector<double> row_sup;  // sup_j b_ij per row, 1-based row i at index i-1
  std::vector<array_check_sample> samples;
  bool holds_all = false;
};

/**
 * Check the normalized-array inequality at each sample point. Rows may be
 * ragged; missing entries are zeros. Entries must be non-negative with a
 * positive total.
 */
inline array_check_result array_theorem_check(const std::vector<std::vector<double>>& a,
                                              const std::vector<double>& xs) {
  std::size_t rows = a.size();
  std::size_t cols = 0;
  double total = 0.0;
  for (const auto& row : a) {
    cols = std::max(cols, row.size());
    for (double v : row) {
      if (!(v >= 0.0)) fail(errc::bad_argument, "array entries must be non-negative");
      total += v;
    }
  }
  if (rows == 0 || total <= 0.0) fail(errc::zero_sum, "array must have positive total");

  // column-prefix totals: colpre[m] = sum over all rows of entries in columns 1..m
  std::vector<double> colpre(cols + 1, 0.0);
  for (std::size_t j = 1; j <= cols; ++j) {
    double colsum = 0.0;
    for (const auto& row : a)
      if (j <= row.size()) colsum += row[j - 1];
    colpre[j] = colpre[j - 1] + colsum;
  }

  array_check_result res;
  res.row_sup.assign(rows, 0.0);
  for (std::size_t i = 1; i <= rows; ++i) {
    const auto& row = a[i - 1];
    double sup = 0.0;
    for (std::size_t j = 1; j <= row.size(); ++j) {
      if (row[j - 1] == 0.0) continue;  // zero numerator contributes zero even at zero denominator
      std::size_t m = std::min(i + j - 1, cols);
      sup = std::max(sup, row[j - 1] / colpre[m]);
    }
    res.row_sup[i - 1] = sup;
  }

  res.holds_all = true;
  for (double x : xs) {
    if (!(x > 0.0)) fail(errc::bad_argument, "sample points must be positive");
    double lhs = 1.0;
    double xi = 1.0;
    for (std::size_t i = 1; i <= rows; ++i) {
      xi *= x;
      lhs += res.row_sup[i - 1] * xi;
    }
    array_check_sample s;
    s.x = x;
    s.lhs = lhs;
    s.holds = lhs > x;
    res.holds_all = res.holds_all && s.holds;
    res.samples.push_back(s);
  }
  return res;
}

struct corollary_result {
  double sup = 0.0;
  std::size_t argmax_j = 0;  // 1-based position of the first maximum
  double bound = 0.0;        // 1/(e k)
  std::vector<double> ratios;
  bool strict = false;  // sup > bound
};

/**
 * Windowed-ratio supremum of a finite non-negative sequence (zero tail
 * implied): ratio_j = a_j / sum_{i <= min(j+k-1, len)} a_i.
 */
inline corollary_result corollary_supremum(const std::vector<double>& a, std::uint32_t k) {
  if (k == 0) fail(errc::bad_argument, "window must be at least 1");
  double total = 0.0;
  for (double v : a) {
    if (!(v >= 0.0)) fail(errc::bad_argument, "sequence entries must be non-negative");
    total += v;
  }
  if (a.empty() || total <= 0.0) fail(errc::zero_sum, "sequence must have positive total");

  std::vector<double> prefix(a.size() + 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) prefix[i + 1] = prefix[i] + a[i];

  corollary_result res;
  res.bound = 1.0 / (std::exp(1.0) * static_cast<double>(k));
  res.ratios.assign(a.size(), 0.0);
  for (std::size_t j = 1; j <= a.size(); ++j) {
    if (a[j - 1] == 0.0) continue;  // ratio 0; denominator contains a_j so it is positive otherwise
    std::size_t m = std::min(j + static_cast<std::size_t>(k) - 1, a.size());
    double r = a[j - 1] / prefix[m];
    res.ratios[j - 1] = r;
    if (r > res.sup) {
      res.sup = r;
      res.argmax_j = j;
    }
  }
  res.strict = res.sup > res.bound;
  return res;
}

}  // namespace lal
