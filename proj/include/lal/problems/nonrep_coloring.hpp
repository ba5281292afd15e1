#pragma once

// Repetition-free vertex coloring: no even path may color its second half
// with the same sequence as its first. A violation through the just-filled
// vertex is repaired by erasing the half-path containing it, so the repair
// element has t-1 vertices for a path of length 2t. With at most
// t * Delta^{2t-1} such paths per vertex and per-path probability |C|^{-t},
// the series is f >= 1 + (Delta f/|C|) / (1 - Delta^2 f/|C|)^2.
//
// Witness search is capped at max_half_length half-path vertices (default 8):
// longer repetitions are astronomically unlikely at certified palette sizes,
// and the independent validator re-checks final states without the cap on
// small graphs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "../condition.hpp"
#include "../engine.hpp"
#include "../graph.hpp"
#include "../thresholds.hpp"

namespace lal {

/** Family row: paths of length 2t through a vertex, t * Delta^{2t-1} of them, each hit with probability <= colors^{-t}. */
inline lal_condition_table nonrep_coloring_table(std::uint32_t delta, std::uint32_t colors) {
  if (colors == 0) fail(errc::bad_argument, "need at least one color");
  if (delta == 0) fail(errc::bad_argument, "need delta >= 1");
  lal_condition_table t;
  t.kind = monoid_kind::powerset;
  generator_condition gc;
  gc.beta = 0;
  gc.label = "vertex (degree " + std::to_string(delta) + ", palette " + std::to_string(colors) + ")";
  geometric_family fam;
  fam.scale = 1.0 / static_cast<double>(delta);
  fam.ratio_coeff = static_cast<double>(delta) * static_cast<double>(delta) / static_cast<double>(colors);
  fam.step = 1;
  fam.start = 1;
  fam.pattern = geometric_family::pattern_t::linear;
  gc.families.push_back(fam);
  t.generators.push_back(std::move(gc));
  return t;
}

/**
 * The substitution y = Delta^2 f / |C| with y = 1 - (2/Delta)^{1/3} turns the
 * series inequality into the palette threshold; the weight it encodes is
 * f = y |C| / Delta^2. Needs delta >= 3 (the threshold's own domain).
 */
inline double nonrep_coloring_weight(std::uint32_t delta, std::uint32_t colors) {
  if (delta <= 2) fail(errc::degenerate_delta, "closed-form weight needs delta >= 3");
  double d = static_cast<double>(delta);
  double y = 1.0 - std::cbrt(2.0 / d);
  return y * static_cast<double>(colors) / (d * d);
}

class nonrep_coloring_problem final : public problem_instance {
 public:
  nonrep_coloring_problem(graph g, std::uint32_t colors, std::uint32_t max_half_length = 8)
      : g_(std::move(g)), colors_(colors), max_half_(max_half_length) {
    if (colors_ == 0) fail(errc::bad_argument, "need at least one color");
    if (max_half_ == 0) fail(errc::bad_argument, "need max_half_length >= 1");
  }

  std::string name() const override { return "nonrep-coloring"; }
  monoid_kind kind() const override { return monoid_kind::powerset; }
  std::uint32_t slot_count() const override { return g_.n; }

  std::int32_t sample(slot_id, const partial_assignment&, rng64& rng) const override {
    return static_cast<std::int32_t>(rng.below(colors_));
  }

  // Any repetitive path in the post-fill state passes through `last` (the
  // pre-fill state is clean). Scan half-lengths upward; among hits at the
  // first violated half-length keep the lexicographically least path.
  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    for (std::uint32_t t = 1; t <= max_half_; ++t) {
      std::optional<std::vector<slot_id>> best;
      enumerate_paths_through(state, last, 2 * t, [&](const std::vector<slot_id>& path) {
        if (!repetitive(state, path)) return;
        if (!best || path < *best) best = path;
      });
      if (best) {
        witness_event e;
        e.kind = witness_event::kind_t::repetitive_path;
        e.param = t;
        e.trigger = last;
        e.witness = *best;
        std::size_t pos =
            static_cast<std::size_t>(std::find(best->begin(), best->end(), last) - best->begin());
        std::vector<slot_id> half(pos < t ? best->begin() : best->begin() + t,
                                  pos < t ? best->begin() + t : best->end());
        half.erase(std::remove(half.begin(), half.end(), last), half.end());
        e.alpha = monoid_element::powerset(std::move(half));
        return std::optional<witness_event>(std::move(e));
      }
    }
    return std::nullopt;
  }

  bool goal(const partial_assignment& state) const override {
    for (std::uint32_t v = 0; v < g_.n; ++v) {
      if (!state.is_filled(v)) continue;
      for (std::uint32_t t = 1; t <= max_half_; ++t) {
        bool hit = false;
        enumerate_paths_through(state, v, 2 * t, [&](const std::vector<slot_id>& path) {
          if (!hit && repetitive(state, path)) hit = true;
        });
        if (hit) return false;
      }
    }
    return true;
  }

  lal_condition_table condition_table() const override {
    return nonrep_coloring_table(std::max(1u, g_.max_degree()), colors_);
  }

  weight_function weights() const override {
    std::uint32_t d = std::max(1u, g_.max_degree());
    if (d >= 3) return weight_function::constant(nonrep_coloring_weight(d, colors_));
    fixpoint_result r = solve_series_fixpoint(generator_series(nonrep_coloring_table(d, colors_)));
    return weight_function::constant(r.feasible ? r.best_f : 1.0);
  }

  const graph& underlying_graph() const { return g_; }
  std::uint32_t colors() const { return colors_; }
  std::uint32_t max_half_length() const { return max_half_; }

 private:
  bool repetitive(const partial_assignment& state, const std::vector<slot_id>& path) const {
    std::size_t t = path.size() / 2;
    for (std::size_t k = 0; k < t; ++k)
      if (state.value_at(path[k]) != state.value_at(path[k + t])) return false;
    return true;
  }

  // Filled simple paths of exactly `len` vertices containing v: place v at
  // every position, grow the left end to 0, then the right end to len-1.
  // Each concrete path is produced once per orientation.
  template <typename F>
  void enumerate_paths_through(const partial_assignment& state, slot_id v, std::uint32_t len,
                               F&& consider) const {
    if (len == 0 || !state.is_filled(v)) return;
    std::vector<slot_id> path(len);
    std::vector<std::uint8_t> used(g_.n, 0);
    used[v] = 1;
    for (std::uint32_t pos = 0; pos < len; ++pos) {
      path[pos] = v;
      grow(state, path, used, pos, pos, consider);
    }
    used[v] = 0;
  }

  template <typename F>
  void grow(const partial_assignment& state, std::vector<slot_id>& path,
            std::vector<std::uint8_t>& used, std::uint32_t lo, std::uint32_t hi,
            F&& consider) const {
    if (lo > 0) {
      for (std::uint32_t u : g_.adj[path[lo]]) {
        if (used[u] || !state.is_filled(u)) continue;
        used[u] = 1;
        path[lo - 1] = u;
        grow(state, path, used, lo - 1, hi, consider);
        used[u] = 0;
      }
      return;
    }
    if (hi + 1 < path.size()) {
      for (std::uint32_t u : g_.adj[path[hi]]) {
        if (used[u] || !state.is_filled(u)) continue;
        used[u] = 1;
        path[hi + 1] = u;
        grow(state, path, used, lo, hi + 1, consider);
        used[u] = 0;
      }
      return;
    }
    consider(path);
  }

  graph g_;
  std::uint32_t colors_;
  std::uint32_t max_half_;
};

inline std::unique_ptr<problem_instance> nonrep_coloring_instance(graph g, std::uint32_t colors,
                                                                  std::uint32_t max_half_length = 8) {
  return std::make_unique<nonrep_coloring_problem>(std::move(g), colors, max_half_length);
}

}  // namespace lal
