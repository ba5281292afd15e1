#pragma once

// Acyclic edge coloring: proper, and no cycle carries only two colors. Two
// samplers realize the same bound of 4(Delta-1) colors.
//
//   restricted: each edge draws uniformly from the colors that keep the
//     coloring proper and free of bichromatic 4-cycles (at most 2(Delta-1)
//     colors are ever excluded, leaving at least |C|-2(Delta-1) options);
//     the only violation class left is a bichromatic cycle of length >= 6.
//   uniform: each edge draws over the whole palette; adjacent repeats and
//     bichromatic 4-cycles become extra violation classes repaired by
//     erasing just the trigger edge (repair element: the empty set).
//
// A bichromatic cycle of length 2t through e is repaired with K'_e: the
// cycle minus its two adjacent edges farthest from e, keeping 2t-2 edges.
// In a proper coloring the subgraph on two colors has maximum degree 2, so
// the cycle through e in colors {c,d} is found by a deterministic walk.

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

namespace lal {

enum class acyclic_strategy { restricted, uniform };

inline const char* acyclic_strategy_name(acyclic_strategy s) {
  return s == acyclic_strategy::restricted ? "restricted" : "uniform";
}

/**
 * Condition table for the chosen sampler at degree delta and palette c.
 * restricted: cycles of length 2t >= 6 only, at most (delta-1)^{2t-2} per
 * edge, each hit with probability <= (c - 2(delta-1))^{-(2t-2)}.
 * uniform: one empty-repair row with p <= 2(delta-1)/c covering adjacent
 * repeats and 4-cycles together, plus the cycle family at <= c^{-(2t-2)}.
 */
inline lal_condition_table acyclic_edge_table(std::uint32_t delta, std::uint32_t colors,
                                              acyclic_strategy strategy) {
  if (colors == 0) fail(errc::bad_argument, "need at least one color");
  if (delta == 0) fail(errc::bad_argument, "need delta >= 1");
  double d1 = static_cast<double>(delta) - 1.0;
  lal_condition_table t;
  t.kind = monoid_kind::powerset;
  generator_condition gc;
  gc.beta = 0;
  gc.label = std::string("edge (") + acyclic_strategy_name(strategy) + ", degree " +
             std::to_string(delta) + ", palette " + std::to_string(colors) + ")";

  double denom;
  if (strategy == acyclic_strategy::restricted) {
    denom = static_cast<double>(colors) - 2.0 * d1;
    if (denom <= 0.0)
      fail(errc::bad_argument, "restricted sampler needs more than 2(delta-1) colors");
  } else {
    denom = static_cast<double>(colors);
    condition_row row;
    row.alpha = monoid_element::powerset({});
    row.p_bound = std::min(1.0, 2.0 * d1 / static_cast<double>(colors));
    gc.rows.push_back(row);
  }
  geometric_family fam;
  fam.scale = 1.0;
  fam.ratio_coeff = (d1 / denom) * (d1 / denom);
  fam.step = 2;
  fam.start = 2;  // exponent 2t-2 for t >= 3, i.e. (q f^2)^s for s >= 2
  fam.pattern = geometric_family::pattern_t::one;
  gc.families.push_back(fam);
  t.generators.push_back(std::move(gc));
  if (colors < 4 * (delta > 0 ? delta - 1 : 0))
    t.note = "palette below 4(delta-1): the bound behind these rows is not guaranteed";
  return t;
}

/** Least feasible uniform weight; exact at the canonical palette 4(delta-1). */
inline double acyclic_edge_weight(std::uint32_t delta, std::uint32_t colors,
                                  acyclic_strategy strategy) {
  double root5 = std::sqrt(5.0);
  if (delta >= 2 && colors == 4 * (delta - 1))
    return strategy == acyclic_strategy::restricted ? root5 - 1.0 : 2.0 * (root5 - 1.0);
  fixpoint_result r = solve_series_fixpoint(generator_series(acyclic_edge_table(delta, colors, strategy)));
  return r.feasible ? r.best_f : 1.0;
}

class acyclic_edge_problem final : public problem_instance {
 public:
  acyclic_edge_problem(graph g, std::uint32_t colors, acyclic_strategy strategy)
      : g_(std::move(g)), colors_(colors), strategy_(strategy) {
    if (colors_ == 0) fail(errc::bad_argument, "need at least one color");
  }

  std::string name() const override {
    return std::string("acyclic-edge-") + acyclic_strategy_name(strategy_);
  }
  monoid_kind kind() const override { return monoid_kind::powerset; }
  std::uint32_t slot_count() const override { return g_.edge_count(); }

  std::int32_t sample(slot_id e, const partial_assignment& state, rng64& rng) const override {
    if (strategy_ == acyclic_strategy::uniform)
      return static_cast<std::int32_t>(rng.below(colors_));
    std::vector<std::int32_t> legal = legal_colors(state, e);
    if (legal.empty()) fail(errc::no_legal_color, "no color keeps edge " + std::to_string(e) +
                                                      " proper and 4-cycle-free");
    return legal[rng.below(legal.size())];
  }

  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    std::int32_t c = state.value_at(last);
    auto [u, v] = g_.edges[last];

    if (strategy_ == acyclic_strategy::uniform) {
      std::int64_t clash = -1;
      for (std::uint32_t w : {u, v}) {
        for (std::uint32_t h : g_.inc[w]) {
          if (h == last || !state.is_filled(h) || state.value_at(h) != c) continue;
          if (clash < 0 || h < clash) clash = h;
        }
      }
      if (clash >= 0) {
        witness_event e;
        e.kind = witness_event::kind_t::adjacent_same_color;
        e.alpha = monoid_element::powerset({});
        e.trigger = last;
        e.witness = {std::min<slot_id>(last, static_cast<slot_id>(clash)),
                     std::max<slot_id>(last, static_cast<slot_id>(clash))};
        return e;
      }
    }

    // Proper at this point; scan second colors in ascending order and keep
    // the least event. A 4-cycle (uniform only) outranks any longer cycle.
    std::optional<witness_event> best;
    for (std::int32_t d = 0; d < static_cast<std::int32_t>(colors_); ++d) {
      if (d == c) continue;
      std::vector<slot_id> cyc = bichromatic_cycle_through(state, last, d);
      if (cyc.empty()) continue;
      witness_event e;
      e.trigger = last;
      e.witness = cyc;
      if (cyc.size() == 4) {
        if (strategy_ == acyclic_strategy::restricted) continue;  // excluded by the sampler
        e.kind = witness_event::kind_t::bichromatic_4cycle;
        e.param = 2;
        e.alpha = monoid_element::powerset({});
      } else {
        std::uint32_t t = static_cast<std::uint32_t>(cyc.size()) / 2;
        e.kind = witness_event::kind_t::bichromatic_cycle;
        e.param = t;
        std::vector<slot_id> keep;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          if (i == t || i == t + 1) continue;  // the two adjacent edges farthest from the trigger
          if (cyc[i] != last) keep.push_back(cyc[i]);
        }
        e.alpha = monoid_element::powerset(std::move(keep));
      }
      if (!best || witness_less(e, *best)) best = std::move(e);
    }
    return best;
  }

  bool goal(const partial_assignment& state) const override {
    for (std::uint32_t e = 0; e < g_.edge_count(); ++e) {
      if (!state.is_filled(e)) continue;
      std::int32_t c = state.value_at(e);
      auto [u, v] = g_.edges[e];
      for (std::uint32_t w : {u, v}) {
        for (std::uint32_t h : g_.inc[w]) {
          if (h != e && state.is_filled(h) && state.value_at(h) == c) return false;
        }
      }
      for (std::int32_t d = 0; d < static_cast<std::int32_t>(colors_); ++d) {
        if (d != c && !bichromatic_cycle_through(state, e, d).empty()) return false;
      }
    }
    return true;
  }

  lal_condition_table condition_table() const override {
    return acyclic_edge_table(std::max(1u, g_.max_degree()), colors_, strategy_);
  }

  weight_function weights() const override {
    return weight_function::constant(
        acyclic_edge_weight(std::max(1u, g_.max_degree()), colors_, strategy_));
  }

  const graph& underlying_graph() const { return g_; }
  std::uint32_t colors() const { return colors_; }
  acyclic_strategy strategy() const { return strategy_; }

 private:
  /** Unique filled edge of the given color at w, excluding `not_this`; -1 if none. */
  std::int64_t edge_of_color_at(const partial_assignment& state, std::uint32_t w, std::int32_t col,
                                std::uint32_t not_this) const {
    for (std::uint32_t h : g_.inc[w]) {
      if (h != not_this && state.is_filled(h) && state.value_at(h) == col) return h;
    }
    return -1;
  }

  /**
   * The cycle through e in colors {value(e), d}, as edge ids in walk order
   * starting at e, or empty. Assumes the filled coloring is proper, so the
   * two-color subgraph has maximum degree 2 and the walk is forced.
   */
  std::vector<slot_id> bichromatic_cycle_through(const partial_assignment& state, slot_id e,
                                                 std::int32_t d) const {
    std::int32_t c = state.value_at(e);
    auto [u, v] = g_.edges[e];
    std::vector<slot_id> walk = {e};
    std::uint32_t at = v;
    std::uint32_t prev_edge = e;
    std::int32_t want = d;
    for (std::uint32_t guard = 0; guard <= g_.edge_count(); ++guard) {
      std::int64_t h = edge_of_color_at(state, at, want, prev_edge);
      if (h < 0) return {};
      auto [a, b] = g_.edges[static_cast<std::uint32_t>(h)];
      at = (a == at) ? b : a;
      walk.push_back(static_cast<slot_id>(h));
      if (at == u) return walk;
      prev_edge = static_cast<std::uint32_t>(h);
      want = (want == d) ? c : d;
    }
    return {};  // unreachable in a proper coloring
  }

  std::vector<std::int32_t> legal_colors(const partial_assignment& state, slot_id e) const {
    auto [u, v] = g_.edges[e];
    std::vector<std::uint8_t> banned(colors_, 0);
    for (std::uint32_t w : {u, v}) {
      for (std::uint32_t h : g_.inc[w]) {
        if (h != e && state.is_filled(h)) banned[static_cast<std::size_t>(state.value_at(h))] = 1;
      }
    }
    // a color closes a 4-cycle u-v-x-y iff vx and uy share a color and xy
    // carries it; ban the color of xy for every same-colored arm pair
    for (std::uint32_t x : g_.adj[v]) {
      if (x == u) continue;
      std::int64_t vx = g_.edge_id(v, x);
      if (vx < 0 || !state.is_filled(static_cast<slot_id>(vx))) continue;
      for (std::uint32_t y : g_.adj[u]) {
        if (y == v || y == x) continue;
        std::int64_t uy = g_.edge_id(u, y);
        if (uy < 0 || !state.is_filled(static_cast<slot_id>(uy))) continue;
        if (state.value_at(static_cast<slot_id>(vx)) != state.value_at(static_cast<slot_id>(uy)))
          continue;
        std::int64_t xy = g_.edge_id(x, y);
        if (xy >= 0 && state.is_filled(static_cast<slot_id>(xy)))
          banned[static_cast<std::size_t>(state.value_at(static_cast<slot_id>(xy)))] = 1;
      }
    }
    std::vector<std::int32_t> legal;
    for (std::uint32_t col = 0; col < colors_; ++col)
      if (!banned[col]) legal.push_back(static_cast<std::int32_t>(col));
    return legal;
  }

  graph g_;
  std::uint32_t colors_;
  acyclic_strategy strategy_;
};

inline std::unique_ptr<problem_instance> acyclic_edge_instance(graph g, std::uint32_t colors,
                                                               acyclic_strategy strategy) {
  return std::make_unique<acyclic_edge_problem>(std::move(g), colors, strategy);
}

}  // namespace lal
