#include <catch_amalgamated.hpp>

#include <cmath>

#include "lal/condition.hpp"
#include "lal/graph.hpp"
#include "lal/problems/acyclic_edge.hpp"
#include "lal/problems/choice_function.hpp"
#include "lal/problems/nonrep_sequence.hpp"
#include "lal/problems/proper_coloring.hpp"
#include "lal/problems/ramsey.hpp"
#include "lal/rng.hpp"

using namespace lal;

TEST_CASE("block-repetition condition is tight at weight 2") {
  lal_condition_table t = nonrep_sequence_table(4);
  condition_report rep = check_lal_inequality(weight_function::constant(2.0), t);
  REQUIRE(rep.slacks.size() == 1);
  CHECK(std::abs(rep.slacks[0].slack) < 1e-12);
  CHECK(rep.holds);

  // at f = 3 the series sums to 3, so the right-hand side is 4
  condition_report at3 = check_lal_inequality(weight_function::constant(3.0), t);
  CHECK(std::abs(at3.slacks[0].rhs - 4.0) < 1e-12);
  CHECK_FALSE(at3.holds);
}

TEST_CASE("restricted-sampler cycle condition is tight at sqrt(5)-1") {
  lal_condition_table t = acyclic_edge_table(3, 8, acyclic_strategy::restricted);
  double f = std::sqrt(5.0) - 1.0;
  condition_report rep = check_lal_inequality(weight_function::constant(f), t);
  CHECK(std::abs(rep.min_slack) < 1e-12);
  CHECK(rep.holds);

  // past the radius of convergence the series diverges
  CHECK_THROWS_AS(check_lal_inequality(weight_function::constant(3.0), t), error);
}

TEST_CASE("uniform-sampler cycle condition is tight at 2(sqrt(5)-1)") {
  lal_condition_table t = acyclic_edge_table(3, 8, acyclic_strategy::uniform);
  double f = 2.0 * (std::sqrt(5.0) - 1.0);
  condition_report rep = check_lal_inequality(weight_function::constant(f), t);
  CHECK(std::abs(rep.min_slack) < 1e-12);
  CHECK(rep.holds);
}

TEST_CASE("retry condition is tight at the palette size") {
  condition_report rep =
      check_lal_inequality(weight_function::constant(4.0), proper_coloring_table(3, 4));
  CHECK(std::abs(rep.min_slack) < 1e-12);
  CHECK(rep.holds);
  CHECK(std::abs(proper_coloring_weight(3, 4) - 4.0) < 1e-15);

  condition_report p3 =
      check_lal_inequality(weight_function::constant(3.0), proper_coloring_table(2, 3));
  CHECK(std::abs(p3.min_slack) < 1e-12);
  CHECK(p3.holds);
}

TEST_CASE("choice condition on the odd cycle is tight at 8 colors") {
  graph c5 = cycle_graph(5);
  choice_system sys = choice_system::proper_coloring(c5.edges, 5, 8, 0.25);
  lal_condition_table t = choice_function_table(sys);
  condition_report rep = check_lal_inequality(choice_function_weights(sys), t);
  REQUIRE(rep.slacks.size() == 5);
  for (const auto& s : rep.slacks) {
    CHECK(std::abs(s.slack) < 1e-12);
    CHECK(std::abs(s.weight - 2.0) < 1e-12);
  }
  CHECK(rep.holds);
}

TEST_CASE("two-coloring table reproduces the per-edge inequality") {
  double p = 0.3;
  lal_condition_table t = ramsey_table(5, 3, p);
  REQUIRE(t.generators.size() == 1);
  REQUIRE(t.generators[0].rows.size() == 2);
  const auto& tri = t.generators[0].rows[0];
  const auto& clq = t.generators[0].rows[1];
  CHECK(tri.multiplicity == 3.0);  // n - 2
  CHECK(std::abs(tri.p_bound - p * p * p) < 1e-15);
  CHECK(tri.alpha_beta_size == 3);
  CHECK(clq.multiplicity == 3.0);  // C(n-2, k-2)
  CHECK(clq.alpha_beta_size == 3);
  CHECK(std::abs(clq.p_bound - std::pow(1.0 - p, 3.0)) < 1e-15);

  double f = 1.2;
  condition_report rep = check_lal_inequality(weight_function::constant(f), t);
  double expected_rhs = 1.0 + 3.0 * p * p * p * f * f * f +
                        3.0 * std::pow(1.0 - p, 3.0) * f * f * f;
  CHECK(std::abs(rep.slacks[0].rhs - expected_rhs) < 1e-12);
}

TEST_CASE("generator_series reproduces the table right-hand side") {
  lal_condition_table tables[] = {
      nonrep_sequence_table(4),
      acyclic_edge_table(3, 8, acyclic_strategy::uniform),
      ramsey_table(6, 4, 0.25),
  };
  for (const auto& t : tables) {
    series_spec s = generator_series(t);
    for (double f : {1.0, 1.1, 1.25}) {
      condition_report rep = check_lal_inequality(weight_function::constant(f), t);
      CHECK(std::abs(s.rhs(f) - rep.slacks[0].rhs) < 1e-12);
    }
  }
}

TEST_CASE("weight transform inverts one minus mu") {
  weight_function f = lll_to_weight({0.5, 0.0});
  CHECK(f.at(0) == 2.0);
  CHECK(f.at(1) == 1.0);
  CHECK_THROWS_AS(lll_to_weight({1.0}), error);
  CHECK_THROWS_AS(lll_to_weight({-0.1}), error);
}

TEST_CASE("lopsided condition slack") {
  SECTION("two independent events at the balance point") {
    lopsided_instance ins;
    ins.mu = {0.5, 0.5};
    ins.pr = {0.5, 0.5};
    ins.gamma = {{}, {}};
    lopsided_report rep = check_lopsided_condition(ins);
    CHECK(rep.slack[0] == 0.0);
    CHECK(rep.slack[1] == 0.0);
    CHECK(rep.holds);
  }
  SECTION("an impossible event satisfies any positive mu") {
    lopsided_instance ins;
    ins.mu = {0.25};
    ins.pr = {0.0};
    ins.gamma = {{}};
    CHECK(check_lopsided_condition(ins).holds);
  }
  SECTION("a sure event fails every mu below one") {
    lopsided_instance ins;
    ins.mu = {0.999};
    ins.pr = {1.0};
    ins.gamma = {{}};
    CHECK_FALSE(check_lopsided_condition(ins).holds);
  }
  SECTION("neighborhoods shrink the budget") {
    lopsided_instance ins;
    ins.mu = {0.5, 0.5};
    ins.pr = {0.3, 0.1};
    ins.gamma = {{1}, {0}};
    lopsided_report rep = check_lopsided_condition(ins);
    CHECK(std::abs(rep.slack[0] - (0.25 - 0.3)) < 1e-15);
    CHECK(std::abs(rep.slack[1] - (0.25 - 0.1)) < 1e-15);
    CHECK_FALSE(rep.holds);
  }
}

TEST_CASE("success probability divides through the repair weight") {
  weight_function f = lll_to_weight({0.5, 0.25, 0.75});
  monoid_element all = monoid_element::powerset({0, 1, 2});
  // full erasure with f(A) = 1/(1-mu(A)) recovers the product of (1-mu)
  CHECK(std::abs(lower_bound_value(all, 1.0, f) - 0.5 * 0.75 * 0.25) < 1e-15);
  CHECK(lower_bound_value(all, 0.0, f) == 0.0);
  CHECK(lower_bound_value(monoid_element::identity(monoid_kind::powerset), 0.37, f) == 0.37);
  CHECK_THROWS_AS(lower_bound_value(all, 1.5, f), error);
}

TEST_CASE("empty tables hold vacuously") {
  lal_condition_table t;
  condition_report rep = check_lal_inequality(weight_function::constant(1.0), t);
  CHECK(rep.holds);
  CHECK(rep.min_slack == 0.0);
}
