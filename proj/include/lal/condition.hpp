#pragma once

// The weight inequality driving every instance: for each generator beta,
//   f(beta) >= 1 + sum over repair outcomes alpha of P(beta,alpha) * fbar(alpha*beta).
// Tables list the outcomes per generator, either as explicit rows (exact alpha,
// optionally with a multiplicity for symmetric events) or as geometric families
// summed in closed form under a uniform weight. Also: the classic lopsided
// local-lemma condition and its translation into weights, plus the probability
// lower bound a certified instance inherits.

#include <cmath>
#include <limits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monoid.hpp"
#include "series.hpp"

namespace lal {

struct condition_row {
  double p_bound = 0.0;
  double multiplicity = 1.0;
  // exactly one of: an explicit repair element, or (uniform weights only) the
  // canonical length of alpha*beta
  std::optional<monoid_element> alpha;
  std::uint32_t alpha_beta_size = 0;
};

struct generator_condition {
  slot_id beta = 0;
  std::string label;
  std::vector<condition_row> rows;
  std::vector<geometric_family> families;  // evaluated at f(beta); uniform weights assumed
};

struct lal_condition_table {
  monoid_kind kind = monoid_kind::powerset;
  std::vector<generator_condition> generators;
  std::string note;  // soundness caveats surfaced by the builder
};

struct condition_slack {
  slot_id beta = 0;
  std::string label;
  double weight = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // weight - rhs
};

struct condition_report {
  std::vector<condition_slack> slacks;
  double min_slack = 0.0;
  double tolerance = 0.0;
  bool holds = false;
};

/**
 * Evaluate every generator's inequality at the given weights. Divergent
 * family sums raise overflow. holds iff every slack >= -tolerance.
 */
inline condition_report check_lal_inequality(const weight_function& f,
                                             const lal_condition_table& table,
                                             double tolerance = 1e-9) {
  condition_report rep;
  rep.tolerance = tolerance;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& gc : table.generators) {
    double fb = f.at(gc.beta);
    double rhs = 1.0;
    for (const auto& row : gc.rows) {
      double fbar;
      if (row.alpha) {
        fbar = underline_f(mul_generator(*row.alpha, gc.beta), f);
      } else {
        fbar = std::pow(fb, static_cast<double>(row.alpha_beta_size));
      }
      rhs += row.multiplicity * row.p_bound * fbar;
    }
    for (const auto& fam : gc.families) {
      double v = fam.sum_closed(fb);
      if (std::isinf(v))
        fail(errc::overflow, "divergent weight series for generator " + std::to_string(gc.beta));
      rhs += v;
    }
    condition_slack s;
    s.beta = gc.beta;
    s.label = gc.label;
    s.weight = fb;
    s.rhs = rhs;
    s.slack = fb - rhs;
    rep.min_slack = std::min(rep.min_slack, s.slack);
    rep.slacks.push_back(std::move(s));
  }
  if (rep.slacks.empty()) rep.min_slack = 0.0;
  rep.holds = rep.min_slack >= -tolerance;
  return rep;
}

/**
 * One generator's RHS as a series in a uniform weight f, for the fixpoint
 * solver: each row becomes c*f^|alpha*beta|, families carry over unchanged.
 */
inline series_spec generator_series(const lal_condition_table& table, std::size_t index = 0) {
  const auto& gc = table.generators.at(index);
  series_spec spec;
  for (const auto& row : gc.rows) {
    series_term t;
    t.coeff = row.multiplicity * row.p_bound;
    t.exponent = row.alpha ? static_cast<std::uint32_t>(mul_generator(*row.alpha, gc.beta).canonical_length())
                           : row.alpha_beta_size;
    spec.terms.push_back(t);
  }
  spec.families = gc.families;
  return spec;
}

// ---------------------------------------------------------------------------
// Lopsided local lemma, explicit dependency-graph form.

struct lopsided_instance {
  std::vector<double> mu;                           // weights in [0,1)
  std::vector<double> pr;                           // event probabilities
  std::vector<std::vector<std::uint32_t>> gamma;    // neighborhoods, no self-entry

  std::size_t size() const { return mu.size(); }
};

/** f(A) = 1/(1 - mu(A)); mu outside [0,1) is rejected. */
inline weight_function lll_to_weight(const std::vector<double>& mu) {
  std::vector<double> f(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] >= 0.0) || mu[i] >= 1.0)
      fail(errc::invalid_mu, "mu[" + std::to_string(i) + "] outside [0,1)");
    f[i] = 1.0 / (1.0 - mu[i]);
  }
  return weight_function::table(std::move(f));
}

struct lopsided_report {
  std::vector<double> slack;  // mu(A) prod_{B in Gamma(A)} (1-mu(B)) - Pr(A)
  double min_slack = 0.0;
  bool holds = false;
};

inline lopsided_report check_lopsided_condition(const lopsided_instance& ins, double tolerance = 0.0) {
  if (ins.pr.size() != ins.mu.size() || ins.gamma.size() != ins.mu.size())
    fail(errc::bad_argument, "mismatched lopsided instance arrays");
  lopsided_report rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (!(ins.mu[i] >= 0.0) || ins.mu[i] >= 1.0) fail(errc::invalid_mu, "mu outside [0,1)");
    double bound = ins.mu[i];
    for (std::uint32_t b : ins.gamma[i]) {
      if (b >= ins.size()) fail(errc::bad_argument, "neighborhood index out of range");
      bound *= 1.0 - ins.mu[b];
    }
    rep.slack.push_back(bound - ins.pr[i]);
    rep.min_slack = std::min(rep.min_slack, bound - ins.pr[i]);
  }
  if (rep.slack.empty()) rep.min_slack = 0.0;
  rep.holds = rep.min_slack >= -tolerance;
  return rep;
}

/**
 * Success probability inherited through an action: if alpha.X reaches the goal
 * with probability pr_good, X itself does with at least pr_good / fbar(alpha).
 */
inline double lower_bound_value(const monoid_element& alpha, double pr_good,
                                const weight_function& f) {
  if (!(pr_good >= 0.0) || pr_good > 1.0) fail(errc::bad_argument, "probability outside [0,1]");
  return pr_good / underline_f(alpha, f);
}

}  // namespace lal
