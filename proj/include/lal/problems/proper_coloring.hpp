#pragma once

// Proper vertex coloring by resampling: fill vertices with uniform colors and
// retry any vertex whose fill matches a neighbor. The repair element is the
// empty set (only the trigger vertex is erased), so the per-vertex condition
// is f >= 1 + (deg/colors) * f, satisfiable exactly when colors > degree.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "../condition.hpp"
#include "../engine.hpp"
#include "../graph.hpp"

namespace lal {

/**
 * Parameter-only condition table: one representative vertex generator with
 * the worst-case conflict bound delta/colors. Equality holds at
 * f = colors = delta + 1.
 */
inline lal_condition_table proper_coloring_table(std::uint32_t delta, std::uint32_t colors) {
  if (colors == 0) fail(errc::bad_argument, "need at least one color");
  lal_condition_table t;
  t.kind = monoid_kind::powerset;
  generator_condition gc;
  gc.beta = 0;
  gc.label = "vertex (degree " + std::to_string(delta) + ")";
  condition_row row;
  row.alpha = monoid_element::powerset({});
  row.p_bound = static_cast<double>(delta) / static_cast<double>(colors);
  gc.rows.push_back(row);
  t.generators.push_back(std::move(gc));
  return t;
}

/** Least feasible uniform weight: f = c/(c-d), the fixpoint of f = 1 + (d/c)f. */
inline double proper_coloring_weight(std::uint32_t delta, std::uint32_t colors) {
  if (colors <= delta) fail(errc::bad_argument, "no feasible weight at colors <= degree");
  return static_cast<double>(colors) / static_cast<double>(colors - delta);
}

class proper_coloring_problem final : public problem_instance {
 public:
  proper_coloring_problem(graph g, std::uint32_t colors) : g_(std::move(g)), colors_(colors) {
    if (colors_ == 0) fail(errc::bad_argument, "need at least one color");
  }

  std::string name() const override { return "proper-coloring"; }
  monoid_kind kind() const override { return monoid_kind::powerset; }
  std::uint32_t slot_count() const override { return g_.n; }

  std::int32_t sample(slot_id, const partial_assignment&, rng64& rng) const override {
    return static_cast<std::int32_t>(rng.below(colors_));
  }

  std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const override {
    for (std::uint32_t u : g_.adj[last]) {
      if (state.is_filled(u) && state.value_at(u) == state.value_at(last)) {
        witness_event e;
        e.kind = witness_event::kind_t::proper_conflict;
        e.alpha = monoid_element::powerset({});
        e.trigger = last;
        e.witness = {std::min<slot_id>(last, u), std::max<slot_id>(last, u)};
        return e;
      }
    }
    return std::nullopt;
  }

  bool goal(const partial_assignment& state) const override {
    for (auto [u, v] : g_.edges) {
      if (state.is_filled(u) && state.is_filled(v) && state.value_at(u) == state.value_at(v))
        return false;
    }
    return true;
  }

  lal_condition_table condition_table() const override {
    return proper_coloring_table(g_.max_degree(), colors_);
  }

  weight_function weights() const override {
    std::uint32_t d = g_.max_degree();
    if (colors_ <= d) return weight_function::constant(1.0);  // checker will report infeasible
    return weight_function::constant(proper_coloring_weight(d, colors_));
  }

  const graph& underlying_graph() const { return g_; }
  std::uint32_t colors() const { return colors_; }

 private:
  graph g_;
  std::uint32_t colors_;
};

inline std::unique_ptr<problem_instance> proper_coloring_instance(graph g, std::uint32_t colors) {
  return std::make_unique<proper_coloring_problem>(std::move(g), colors);
}

}  // namespace lal
