#pragma once

// Two-coloring the edges of K_n against blue triangles and red k-cliques.
// Each edge is blue with probability p. A blue triangle through the trigger
// is repaired by erasing its three edges; a red k-clique by erasing all
// C(k,2) clique edges. Per-edge counts (n-2 triangles, C(n-2,k-2) cliques)
// give the two-row table behind the decoupled certificate in thresholds.hpp.
//
// Clique searches run in ascending vertex order with a node budget, so the
// witness is the lexicographically least clique; exceeding the budget raises
// too-large rather than silently missing a violation.

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

inline constexpr std::int32_t ramsey_red = 0;
inline constexpr std::int32_t ramsey_blue = 1;

/** Two aggregate rows: triangles (3 edges, p^3 each, n-2 of them) and cliques. */
inline lal_condition_table ramsey_table(std::uint32_t n, std::uint32_t k, double p) {
  if (k < 3) fail(errc::invalid_order, "clique order must be at least 3");
  if (n < 3) fail(errc::bad_argument, "need n >= 3");
  if (!(p > 0.0) || !(p < 1.0)) fail(errc::bad_argument, "blue probability must be in (0,1)");
  lal_condition_table t;
  t.kind = monoid_kind::powerset;
  generator_condition gc;
  gc.beta = 0;
  gc.label = "edge of K_" + std::to_string(n) + " (blue triangles, red K_" + std::to_string(k) + ")";
  condition_row tri;
  tri.alpha_beta_size = 3;
  tri.p_bound = p * p * p;
  tri.multiplicity = static_cast<double>(n) - 2.0;
  gc.rows.push_back(tri);
  condition_row clq;
  clq.alpha_beta_size = k * (k - 1) / 2;
  clq.p_bound = std::pow(1.0 - p, static_cast<double>(clq.alpha_beta_size));
  clq.multiplicity = binomial(n - 2, k - 2);
  gc.rows.push_back(clq);
  t.generators.push_back(std::move(gc));
  return t;
}

class ramsey_problem final : public problem_instance {
 public:
  // k > n is legal: the red-clique class is then empty and only blue
  // triangles constrain the coloring (the regime the max-n witness runs use).
  ramsey_problem(std::uint32_t n, std::uint32_t k, double p)
      : g_(complete_graph(n)), n_(n), k_(k), p_(p) {
    if (k < 3) fail(errc::invalid_order, "clique order must be at least 3");
    if (n < 3) fail(errc::bad_argument, "need n >= 3");
    if (!(p > 0.0) || !(p < 1.0)) fail(errc::bad_argument, "blue probability must be in (0,1)");
  }

  std::string name() const override { return "ramsey"; }
  monoid_kind kind() const override { return monoid_kind::powerset; }
  std::uint32_t slot_count() const override { return g_.edge_count(); }

  std::int32_t sample(slot_id, const partial_assignment&, rng64& rng) const override {
    return rng.coin(p_) ? ramsey_blue : ramsey_red;
  }

  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    auto [u, v] = g_.edges[last];
    if (state.value_at(last) == ramsey_blue) {
      for (std::uint32_t w = 0; w < n_; ++w) {
        if (w == u || w == v) continue;
        slot_id uw = static_cast<slot_id>(g_.edge_id(u, w));
        slot_id vw = static_cast<slot_id>(g_.edge_id(v, w));
        if (state.is_filled(uw) && state.value_at(uw) == ramsey_blue && state.is_filled(vw) &&
            state.value_at(vw) == ramsey_blue) {
          witness_event e;
          e.kind = witness_event::kind_t::blue_triangle;
          e.trigger = last;
          e.witness = {last, uw, vw};
          std::sort(e.witness.begin(), e.witness.end());
          e.alpha = monoid_element::powerset({uw, vw});
          return e;
        }
      }
      return std::nullopt;
    }
    std::vector<std::uint32_t> clique = {u, v};
    if (!complete_red_clique(state, clique)) return std::nullopt;
    witness_event e;
    e.kind = witness_event::kind_t::red_clique;
    e.param = k_;
    e.trigger = last;
    std::vector<slot_id> edges_of;
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        edges_of.push_back(static_cast<slot_id>(g_.edge_id(clique[i], clique[j])));
    std::sort(edges_of.begin(), edges_of.end());
    e.witness = edges_of;
    edges_of.erase(std::remove(edges_of.begin(), edges_of.end(), last), edges_of.end());
    e.alpha = monoid_element::powerset(std::move(edges_of));
    return e;
  }

  bool goal(const partial_assignment& state) const override {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = a + 1; b < n_; ++b) {
        slot_id ab = static_cast<slot_id>(g_.edge_id(a, b));
        if (!state.is_filled(ab) || state.value_at(ab) != ramsey_blue) continue;
        for (std::uint32_t c = b + 1; c < n_; ++c) {
          slot_id ac = static_cast<slot_id>(g_.edge_id(a, c));
          slot_id bc = static_cast<slot_id>(g_.edge_id(b, c));
          if (state.is_filled(ac) && state.value_at(ac) == ramsey_blue && state.is_filled(bc) &&
              state.value_at(bc) == ramsey_blue)
            return false;
        }
      }
    std::vector<std::uint32_t> clique;
    return !complete_red_clique(state, clique);
  }

  lal_condition_table condition_table() const override { return ramsey_table(n_, k_, p_); }

  weight_function weights() const override {
    return weight_function::constant(ramsey_certify(k_, n_).f);
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  double blue_probability() const { return p_; }
  const graph& underlying_graph() const { return g_; }

 private:
  bool red_filled(const partial_assignment& state, std::uint32_t a, std::uint32_t b) const {
    slot_id e = static_cast<slot_id>(g_.edge_id(a, b));
    return state.is_filled(e) && state.value_at(e) == ramsey_red;
  }

  /**
   * Grow `clique` (the fixed seed vertices) to k_ vertices, all pairs filled
   * red, adding extension vertices in ascending order so every candidate set
   * is visited once and the first completion is the least one. DFS capped at
   * 10^8 nodes.
   */
  bool complete_red_clique(const partial_assignment& state, std::vector<std::uint32_t>& clique) const {
    std::uint64_t nodes = 0;
    return extend_clique(state, clique, 0, nodes);
  }

  bool extend_clique(const partial_assignment& state, std::vector<std::uint32_t>& clique,
                     std::uint32_t from, std::uint64_t& nodes) const {
    if (clique.size() == k_) return true;
    if (++nodes > 100'000'000ull) fail(errc::too_large, "clique search budget exceeded");
    for (std::uint32_t w = from; w < n_; ++w) {
      if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
      bool ok = true;
      for (std::uint32_t q : clique)
        if (!red_filled(state, q, w)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(w);
      if (extend_clique(state, clique, w + 1, nodes)) return true;
      clique.pop_back();
    }
    return false;
  }

  graph g_;
  std::uint32_t n_, k_;
  double p_;
};

inline std::unique_ptr<problem_instance> ramsey_instance(std::uint32_t n, std::uint32_t k, double p) {
  return std::make_unique<ramsey_problem>(n, k, p);
}

}  // namespace lal
