#pragma once

// Choice functions under forbidden partial choices. Block k picks one of its
// elements with probability p'(u) = p(u)/f(k), where f(k) is the block's
// marginal sum; those f(k) are also the weights. A forbidden partial choice
// P_j appearing in the current selection is repaired by erasing every block
// it mentions, and contributes the row (dom P_j minus {k}, prod p'(u)) to
// each block k it covers. The mean condition
//   f(k) >= 1 + sum_{dom P_j contains k} prod_{u in P_j} p'(u) * prod_{s in dom P_j} f(s)
// is then exactly the generator inequality the checker evaluates.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../condition.hpp"
#include "../engine.hpp"

namespace lal {

struct choice_system {
  // marginals[k][i] = p(u) for element i of block k
  std::vector<std::vector<double>> marginals;
  // each forbidden partial choice: (block, element index) pairs, distinct blocks
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> forbidden;

  std::uint32_t block_count() const { return static_cast<std::uint32_t>(marginals.size()); }

  double block_sum(std::uint32_t k) const {
    double s = 0.0;
    for (double p : marginals[k]) s += p;
    return s;
  }

  void validate() const {
    for (const auto& block : marginals) {
      if (block.empty()) fail(errc::invalid_marginals, "empty block");
      double s = 0.0;
      for (double p : block) {
        if (!(p >= 0.0) || !(p <= 1.0)) fail(errc::invalid_marginals, "marginal outside [0,1]");
        s += p;
      }
      if (s <= 0.0) fail(errc::invalid_marginals, "block marginals sum to zero");
    }
    for (const auto& pj : forbidden) {
      if (pj.empty()) fail(errc::bad_argument, "empty forbidden partial choice");
      for (std::size_t i = 0; i < pj.size(); ++i) {
        auto [k, u] = pj[i];
        if (k >= marginals.size() || u >= marginals[k].size())
          fail(errc::bad_argument, "forbidden entry out of range");
        if (i > 0 && pj[i - 1].first >= k)
          fail(errc::bad_argument, "forbidden blocks must be strictly increasing");
      }
    }
  }

  /** The proper-coloring encoding: one block per vertex, r colors, all forbidden pairs per edge. */
  static choice_system proper_coloring(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                       std::uint32_t n, std::uint32_t r, double q) {
    choice_system s;
    s.marginals.assign(n, std::vector<double>(r, q));
    for (auto [u, v] : edges) {
      if (u > v) std::swap(u, v);
      for (std::uint32_t c = 0; c < r; ++c) s.forbidden.push_back({{u, c}, {v, c}});
    }
    return s;
  }
};

/** Per-block generator inequalities; weights are the block marginal sums. */
inline lal_condition_table choice_function_table(const choice_system& sys) {
  sys.validate();
  lal_condition_table t;
  t.kind = monoid_kind::powerset;
  for (std::uint32_t k = 0; k < sys.block_count(); ++k) {
    generator_condition gc;
    gc.beta = k;
    gc.label = "block " + std::to_string(k);
    for (const auto& pj : sys.forbidden) {
      bool covers = false;
      double prob = 1.0;
      std::vector<slot_id> others;
      for (auto [b, u] : pj) {
        prob *= sys.marginals[b][u] / sys.block_sum(b);
        if (b == k)
          covers = true;
        else
          others.push_back(b);
      }
      if (!covers) continue;
      condition_row row;
      row.alpha = monoid_element::powerset(std::move(others));
      row.p_bound = prob;
      gc.rows.push_back(std::move(row));
    }
    t.generators.push_back(std::move(gc));
  }
  return t;
}

inline weight_function choice_function_weights(const choice_system& sys) {
  std::vector<double> f(sys.block_count());
  for (std::uint32_t k = 0; k < sys.block_count(); ++k) f[k] = sys.block_sum(k);
  return weight_function::table(std::move(f));
}

class choice_function_problem final : public problem_instance {
 public:
  explicit choice_function_problem(choice_system sys) : sys_(std::move(sys)) {
    sys_.validate();
  }

  std::string name() const override { return "choice-function"; }
  monoid_kind kind() const override { return monoid_kind::powerset; }
  std::uint32_t slot_count() const override { return sys_.block_count(); }

  // One categorical draw over the block, normalized by the marginal sum.
  std::int32_t sample(slot_id k, const partial_assignment&, rng64& rng) const override {
    const auto& block = sys_.marginals[k];
    double target = rng.unit() * sys_.block_sum(k);
    double cum = 0.0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      cum += block[i];
      if (target < cum) return static_cast<std::int32_t>(i);
    }
    return static_cast<std::int32_t>(block.size() - 1);
  }

  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    for (std::uint32_t j = 0; j < sys_.forbidden.size(); ++j) {
      const auto& pj = sys_.forbidden[j];
      bool covers = false, matches = true;
      for (auto [b, u] : pj) {
        if (b == last) covers = true;
        if (!state.is_filled(b) || state.value_at(b) != static_cast<std::int32_t>(u)) {
          matches = false;
          break;
        }
      }
      if (!covers || !matches) continue;
      witness_event e;
      e.kind = witness_event::kind_t::forbidden_choice;
      e.param = j;
      e.trigger = last;
      std::vector<slot_id> others;
      for (auto [b, u] : pj) {
        e.witness.push_back(b);
        if (b != last) others.push_back(b);
      }
      e.alpha = monoid_element::powerset(std::move(others));
      return e;
    }
    return std::nullopt;
  }

  bool goal(const partial_assignment& state) const override {
    for (const auto& pj : sys_.forbidden) {
      bool matches = true;
      for (auto [b, u] : pj) {
        if (!state.is_filled(b) || state.value_at(b) != static_cast<std::int32_t>(u)) {
          matches = false;
          break;
        }
      }
      if (matches) return false;
    }
    return true;
  }

  lal_condition_table condition_table() const override { return choice_function_table(sys_); }

  weight_function weights() const override { return choice_function_weights(sys_); }

  const choice_system& system() const { return sys_; }

 private:
  choice_system sys_;
};

inline std::unique_ptr<problem_instance> choice_function_instance(choice_system sys) {
  return std::make_unique<choice_function_problem>(std::move(sys));
}

}  // namespace lal
