#pragma once

// Repetition-free sequences with per-position alphabets of size >= 4. The
// state is always a filled prefix; a repeated block of length t ending at the
// frontier is repaired with the (t-1)-th generator power, i.e. the whole
// second half of the repetition is truncated. With alphabet size a the block
// probability is at most a^{-t}, giving the series f >= 1/(1 - f/a) whose
// least root at a = 4 is exactly 2.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "../condition.hpp"
#include "../engine.hpp"

namespace lal {

struct list_system {
  std::vector<std::vector<std::int32_t>> lists;  // lists[k] = allowed values at position k

  std::size_t size() const { return lists.size(); }

  static list_system uniform(std::size_t n, std::int32_t alphabet) {
    list_system s;
    s.lists.assign(n, {});
    for (auto& l : s.lists) {
      l.resize(static_cast<std::size_t>(alphabet));
      for (std::int32_t v = 0; v < alphabet; ++v) l[static_cast<std::size_t>(v)] = v;
    }
    return s;
  }

  std::size_t min_list_size() const {
    std::size_t m = SIZE_MAX;
    for (const auto& l : lists) m = std::min(m, l.size());
    return lists.empty() ? 0 : m;
  }
};

/** Single-generator table: block of length t repeats with probability <= a^{-t}. */
inline lal_condition_table nonrep_sequence_table(std::size_t min_list_size) {
  if (min_list_size == 0) fail(errc::bad_argument, "empty value list");
  lal_condition_table t;
  t.kind = monoid_kind::free_power;
  generator_condition gc;
  gc.beta = 0;
  gc.label = "position (alphabet " + std::to_string(min_list_size) + ")";
  geometric_family fam;
  fam.scale = 1.0;
  fam.ratio_coeff = 1.0 / static_cast<double>(min_list_size);
  fam.step = 1;
  fam.start = 1;
  fam.pattern = geometric_family::pattern_t::one;
  gc.families.push_back(fam);
  t.generators.push_back(std::move(gc));
  return t;
}

/**
 * Least root of f = 1/(1 - f/a), i.e. f^2 - a f + a = 0. At a = 4 the root
 * is double and equals 2 exactly; below 4 the series has no fixpoint.
 */
inline double nonrep_sequence_weight(std::size_t min_list_size) {
  double a = static_cast<double>(min_list_size);
  double disc = a * a - 4.0 * a;
  if (disc < 0.0) fail(errc::bad_argument, "no feasible weight below alphabet size 4");
  return (a - std::sqrt(disc)) / 2.0;
}

class nonrep_sequence_problem final : public problem_instance {
 public:
  explicit nonrep_sequence_problem(list_system lists) : lists_(std::move(lists)) {
    for (const auto& l : lists_.lists)
      if (l.empty()) fail(errc::bad_argument, "empty value list");
  }

  std::string name() const override { return "nonrep-sequence"; }
  monoid_kind kind() const override { return monoid_kind::free_power; }
  std::uint32_t slot_count() const override { return static_cast<std::uint32_t>(lists_.size()); }

  std::int32_t sample(slot_id slot, const partial_assignment&, rng64& rng) const override {
    const auto& l = lists_.lists[slot];
    return l[rng.below(l.size())];
  }

  // The filled region is the prefix [0, last]. Scan block lengths t downward
  // and repair the longest repetition: erasing more per event converges
  // faster, and any admissible t is a valid repair.
  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    std::uint32_t m = last + 1;
    for (std::uint32_t t = m / 2; t >= 1; --t) {
      bool rep = true;
      for (std::uint32_t k = m - 2 * t; k < m - t && rep; ++k)
        rep = state.value_at(k) == state.value_at(k + t);
      if (rep) {
        witness_event e;
        e.kind = witness_event::kind_t::repeated_block;
        e.param = t;
        e.alpha = monoid_element::free_power(t - 1);
        e.trigger = last;
        e.witness.resize(2 * t);
        for (std::uint32_t i = 0; i < 2 * t; ++i) e.witness[i] = m - 2 * t + i;
        return e;
      }
    }
    return std::nullopt;
  }

  bool goal(const partial_assignment& state) const override {
    std::uint32_t m = static_cast<std::uint32_t>(state.filled_count());
    for (std::uint32_t end = 2; end <= m; ++end) {
      for (std::uint32_t t = 1; t <= end / 2; ++t) {
        bool rep = true;
        for (std::uint32_t k = end - 2 * t; k < end - t && rep; ++k)
          rep = state.value_at(k) == state.value_at(k + t);
        if (rep) return false;
      }
    }
    return true;
  }

  lal_condition_table condition_table() const override {
    return nonrep_sequence_table(lists_.min_list_size());
  }

  weight_function weights() const override {
    if (lists_.min_list_size() < 4) return weight_function::constant(1.0);
    return weight_function::constant(nonrep_sequence_weight(lists_.min_list_size()));
  }

  const list_system& lists() const { return lists_; }

 private:
  list_system lists_;
};

inline std::unique_ptr<problem_instance> nonrep_sequence_instance(list_system lists) {
  return std::make_unique<nonrep_sequence_problem>(std::move(lists));
}

}  // namespace lal
