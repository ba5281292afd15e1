// Exit gate for the whole kit, as seven independent checks:
//   1. closed-form weights and the mu -> 1/(1-mu) translation, to 1e-12
//   2. solver success at scale, every final state independently validated
//   3. brute-force oracle agreement on small instances, detector vs scanner
//      at every step of every trace
//   4. the two-coloring certificate versus a dense grid search, plus witness
//      runs at the largest certified size
//   5. exact probability-space enumeration against the product lower bound,
//      and a Monte Carlo cross-check
//   6. the normalized-array inequality and its windowed-ratio corollary on
//      random inputs
//   7. trace decoding and bit-identical replay of every criterion-2 run
// Each check prints one PASS/FAIL line; the process exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lal/array_theorem.hpp"
#include "lal/condition.hpp"
#include "lal/engine.hpp"
#include "lal/graph.hpp"
#include "lal/json_io.hpp"
#include "lal/problems/acyclic_edge.hpp"
#include "lal/problems/choice_function.hpp"
#include "lal/problems/nonrep_coloring.hpp"
#include "lal/problems/nonrep_sequence.hpp"
#include "lal/problems/proper_coloring.hpp"
#include "lal/problems/ramsey.hpp"
#include "lal/rng.hpp"
#include "lal/series.hpp"
#include "lal/thresholds.hpp"
#include "lal/trace.hpp"
#include "lal/validate.hpp"
#include "support/trace_tools.hpp"

namespace {

using namespace lal;
using nlohmann::json;

struct reporter {
  bool ok = true;
  int shown = 0;

  void fail(const std::string& msg) {
    ok = false;
    if (shown < 8)
      std::printf("  %s\n", msg.c_str());
    else if (shown == 8)
      std::printf("  (further failures suppressed)\n");
    ++shown;
  }

  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<std::int32_t> values_of(const partial_assignment& st) {
  std::vector<std::int32_t> v(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) v[i] = st.value_at(static_cast<slot_id>(i));
  return v;
}

// ---------------------------------------------------------------------------
// criterion 1: closed forms

void criterion1(reporter& rep) {
  const double tol = 1e-12;
  const double root5 = std::sqrt(5.0);

  rep.require(near(proper_coloring_weight(3, 4), 4.0, tol), "proper weight at (3,4) is not 4");
  rep.require(near(nonrep_sequence_weight(4), 2.0, tol), "sequence weight at alphabet 4 is not 2");
  rep.require(near(acyclic_edge_weight(3, 8, acyclic_strategy::restricted), root5 - 1.0, tol),
              "restricted acyclic weight at (3,8) is not sqrt5-1");
  rep.require(near(acyclic_edge_weight(3, 8, acyclic_strategy::uniform), 2.0 * (root5 - 1.0), tol),
              "uniform acyclic weight at (3,8) is not 2(sqrt5-1)");

  rep.require(nonrep_color_threshold(3) == 76, "palette threshold at delta 3 is not 76");
  rep.require(nonrep_color_threshold(10) == 271, "palette threshold at delta 10 is not 271");
  rep.require(nonrep_color_threshold(100) == 15083, "palette threshold at delta 100 is not 15083");

  // the four roots sit exactly on their inequalities
  struct tangency {
    const char* what;
    lal_condition_table table;
    double f;
  };
  std::vector<tangency> cases;
  cases.push_back({"proper (3,4)", proper_coloring_table(3, 4), 4.0});
  cases.push_back({"sequence (a=4)", nonrep_sequence_table(4), 2.0});
  cases.push_back({"acyclic restricted (3,8)",
                   acyclic_edge_table(3, 8, acyclic_strategy::restricted), root5 - 1.0});
  cases.push_back({"acyclic uniform (3,8)",
                   acyclic_edge_table(3, 8, acyclic_strategy::uniform), 2.0 * (root5 - 1.0)});
  for (const auto& c : cases) {
    auto r = check_lal_inequality(weight_function::constant(c.f), c.table);
    rep.require(r.holds && std::abs(r.min_slack) <= 1e-9,
                std::string("root of ") + c.what + " is not tangent (slack " +
                    std::to_string(r.min_slack) + ")");
  }

  rng64 rng(101);
  for (int rep_i = 0; rep_i < 100; ++rep_i) {
    std::size_t n = 1 + rng.below(16);
    std::vector<double> mu(n);
    for (auto& m : mu) m = rng.unit() * 0.99;
    weight_function f = lll_to_weight(mu);
    for (std::size_t i = 0; i < n; ++i) {
      if (!near(f.at(static_cast<slot_id>(i)), 1.0 / (1.0 - mu[i]), tol)) {
        rep.fail("mu translation differs from 1/(1-mu) at index " + std::to_string(i));
        break;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 2: solver success at scale (instances and traces kept for 7)

struct c2_capture {
  const problem_instance* ins = nullptr;
  std::uint64_t seed = 0;
  run_trace trace;
  run_report report;
};

struct c2_data {
  std::vector<std::unique_ptr<problem_instance>> owned;
  std::vector<c2_capture> runs;
};

void criterion2(reporter& rep, c2_data& data) {
  auto solve_one = [&](const problem_instance& ins, std::uint64_t seed,
                       const std::string& what) -> std::optional<run_result> {
    run_result res = run(ins, seed, default_budget, true);
    if (res.report.status != run_status::terminated) {
      rep.fail(what + " seed " + std::to_string(seed) + ": " + run_status_name(res.report.status));
      return std::nullopt;
    }
    if (res.report.steps_used > 10'000'000) {
      rep.fail(what + " seed " + std::to_string(seed) + ": over the step budget");
      return std::nullopt;
    }
    data.runs.push_back({&ins, seed, res.trace, res.report});
    return res;
  };

  {  // repetition-free sequences, n = 500 over a 4-letter alphabet
    data.owned.push_back(nonrep_sequence_instance(list_system::uniform(500, 4)));
    const auto& ins = *data.owned.back();
    for (int i = 0; i < 100; ++i) {
      std::optional<run_result> res = solve_one(ins, 100 + i, "sequence");
      if (!res) continue;
      if (check_nonrepetitive_sequence(values_of(res->report.final_state)))
        rep.fail("sequence seed " + std::to_string(100 + i) + ": repeated block in final state");
    }
  }

  {  // proper coloring of random 5-regular graphs with 6 colors
    for (int i = 0; i < 100; ++i) {
      graph g = random_regular_graph(200, 5, 1000 + i);
      data.owned.push_back(proper_coloring_instance(g, 6));
      const auto& ins = *data.owned.back();
      std::optional<run_result> res = solve_one(ins, 1000 + i, "proper");
      if (!res) continue;
      if (check_proper_coloring(g, values_of(res->report.final_state)))
        rep.fail("proper seed " + std::to_string(1000 + i) + ": monochromatic edge");
    }
  }

  {  // acyclic edge coloring of random 6-regular graphs, 20 colors, both samplers
    for (int i = 0; i < 100; ++i) {
      acyclic_strategy strat = i < 50 ? acyclic_strategy::restricted : acyclic_strategy::uniform;
      graph g = random_regular_graph(100, 6, 2000 + i);
      data.owned.push_back(acyclic_edge_instance(g, 20, strat));
      const auto& ins = *data.owned.back();
      std::optional<run_result> res = solve_one(ins, 2000 + i, ins.name());
      if (!res) continue;
      if (check_acyclic_edge_coloring(g, values_of(res->report.final_state)))
        rep.fail(ins.name() + " seed " + std::to_string(2000 + i) + ": conflict in final state");
    }
  }

  {  // repetition-free vertex coloring of bounded-degree trees at the threshold palette
    const std::uint32_t palette = static_cast<std::uint32_t>(nonrep_color_threshold(3));
    for (int i = 0; i < 100; ++i) {
      graph g = random_bounded_tree(30, 3, 3000 + i);
      data.owned.push_back(nonrep_coloring_instance(g, palette, 15));
      const auto& ins = *data.owned.back();
      std::optional<run_result> res = solve_one(ins, 3000 + i, "tree coloring");
      if (!res) continue;
      if (check_nonrepetitive_coloring(g, values_of(res->report.final_state)))
        rep.fail("tree coloring seed " + std::to_string(3000 + i) + ": repetitive path");
    }
  }

  rep.require(data.runs.size() == 400 || !rep.ok,
              "expected 400 captured runs, have " + std::to_string(data.runs.size()));
}

// ---------------------------------------------------------------------------
// criterion 3: oracle agreement on small instances

struct c3_tally {
  std::uint64_t runs = 0;
  std::uint64_t terminated = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t steps_checked = 0;
};

void exercise_small(reporter& rep, c3_tally& tally, const problem_instance& ins,
                    std::uint64_t seed, std::uint64_t budget,
                    const std::function<bool(const partial_assignment&)>& violated, bool feasible,
                    const std::string& what) {
  if (ins.slot_count() > 12) {
    rep.fail(what + ": instance exceeds 12 slots");
    return;
  }
  ++tally.runs;
  run_result res = run(ins, seed, budget, true);

  bool lockstep_ok = true;
  testsupport::walk_trace(
      ins, res.trace,
      [&](const partial_assignment& st, slot_id) {
        if (lockstep_ok && violated(st)) {
          rep.fail(what + ": violation survived into a pre-fill state");
          lockstep_ok = false;
        }
      },
      [&](const partial_assignment& st, const trace_step& step) {
        ++tally.steps_checked;
        if (lockstep_ok && violated(st) != step.event.has_value()) {
          rep.fail(what + ": detector and scanner disagree after filling slot " +
                   std::to_string(step.slot));
          lockstep_ok = false;
        }
      });

  if (res.report.status == run_status::terminated) {
    ++tally.terminated;
    if (!feasible) rep.fail(what + ": terminated on an infeasible instance");
    if (violated(res.report.final_state)) rep.fail(what + ": final state fails its scanner");
  } else if (!feasible) {
    ++tally.infeasible;
  }
}

void criterion3(reporter& rep) {
  c3_tally tally;

  {  // proper coloring: paths, cycles, bounded trees
    for (int i = 0; i < 240; ++i) {
      std::uint32_t n = 3 + i % 8;
      std::uint32_t colors = 2 + (i / 24) % 4;
      int kind = (i / 8) % 3;
      graph g = kind == 0   ? path_graph(n)
                : kind == 1 ? cycle_graph(n)
                            : random_bounded_tree(n, 3, 9000 + i);
      bool feasible = exhaustive_feasibility(proper_coloring_feasibility(g, colors), 1'000'000'000);
      auto ins = proper_coloring_instance(g, colors);
      exercise_small(rep, tally, *ins, 400 + i, 30'000,
                     [&g](const partial_assignment& st) {
                       return proper_conflict_in(g, st).has_value();
                     },
                     feasible, "proper #" + std::to_string(i));
    }
  }

  {  // repetition-free sequences, alphabets 2..6
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> feas;
    for (std::uint32_t a = 2; a <= 6; ++a) {
      std::uint32_t n_cap = a == 2 ? 5u : (a <= 4 ? 12u : 8u);
      for (std::uint32_t n = 2; n <= n_cap; ++n) {
        list_system lists = list_system::uniform(n, static_cast<std::int32_t>(a));
        auto key = std::make_pair(a, n);
        if (!feas.count(key))
          feas[key] = exhaustive_feasibility(sequence_feasibility(lists), 1'000'000'000);
        auto ins = nonrep_sequence_instance(lists);
        for (int s = 0; s < 5; ++s) {
          exercise_small(rep, tally, *ins, 500 + 10 * n + s, a == 2 ? 20'000 : 100'000,
                         [](const partial_assignment& st) {
                           return repetition_in(st).has_value();
                         },
                         feas[key],
                         "sequence a=" + std::to_string(a) + " n=" + std::to_string(n));
        }
      }
    }
  }

  {  // acyclic edge coloring: paths, cycles, K4, K5, both samplers
    std::vector<graph> graphs;
    for (std::uint32_t n : {5u, 7u, 9u, 11u, 13u}) graphs.push_back(path_graph(n));
    for (std::uint32_t n : {4u, 6u, 8u, 10u, 12u}) graphs.push_back(cycle_graph(n));
    graphs.push_back(complete_graph(4));
    graphs.push_back(complete_graph(5));
    int gi = 0;
    for (const graph& g : graphs) {
      std::vector<std::uint32_t> palettes =
          g.edge_count() == 10 ? std::vector<std::uint32_t>{2, 4, 8}
                               : std::vector<std::uint32_t>{2, 4, 6, 8};
      for (std::uint32_t colors : palettes) {
        bool feasible =
            exhaustive_feasibility(acyclic_edge_feasibility(g, colors), 100'000'000'000'000ull);
        for (auto strat : {acyclic_strategy::restricted, acyclic_strategy::uniform}) {
          auto ins = acyclic_edge_instance(g, colors, strat);
          for (int s = 0; s < 2; ++s) {
            exercise_small(rep, tally, *ins, 600 + 10 * gi + s, 30'000,
                           [&g](const partial_assignment& st) {
                             return acyclic_conflict_in(g, st).has_value();
                           },
                           feasible,
                           "acyclic g" + std::to_string(gi) + " c=" + std::to_string(colors));
          }
        }
      }
      ++gi;
    }
  }

  {  // repetition-free vertex coloring: paths, cycles, random trees
    auto run_block = [&](const graph& g, std::uint32_t colors, int id, int seeds) {
      bool feasible = exhaustive_feasibility(nonrepetitive_coloring_feasibility(g, colors),
                                             1'000'000'000);
      auto ins = nonrep_coloring_instance(g, colors);
      for (int s = 0; s < seeds; ++s) {
        exercise_small(rep, tally, *ins, 700 + 10 * id + s, 30'000,
                       [&g](const partial_assignment& st) {
                         return repetitive_path_in(g, st, 30).has_value();
                       },
                       feasible, "vertex coloring #" + std::to_string(id));
      }
    };
    int id = 0;
    for (std::uint32_t n = 3; n <= 12; ++n)
      for (std::uint32_t c : {3u, 4u, 5u}) run_block(path_graph(n), c, id++, 2);
    for (std::uint32_t n = 3; n <= 10; ++n)
      for (std::uint32_t c : {3u, 4u, 5u}) run_block(cycle_graph(n), c, id++, 2);
    for (std::uint32_t n = 5; n <= 12; ++n)
      for (std::uint32_t c : {3u, 4u, 5u}) run_block(random_bounded_tree(n, 3, 9500 + n), c, id++, 2);
  }

  {  // two-colorings of K3..K5
    for (std::uint32_t n = 3; n <= 5; ++n) {
      for (std::uint32_t k = 3; k <= 5; ++k) {
        bool feasible = exhaustive_feasibility(ramsey_feasibility(n, k), 1'000'000'000);
        for (double p : {0.3, 0.5, 0.7}) {
          auto ins = ramsey_instance(n, k, p);
          for (int s = 0; s < 4; ++s) {
            exercise_small(rep, tally, *ins, 800 + 10 * n + k + s, 30'000,
                           [n, k](const partial_assignment& st) {
                             return ramsey_conflict_in(n, k, st).has_value();
                           },
                           feasible,
                           "two-coloring n=" + std::to_string(n) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }

  {  // choice functions: cycle colorings plus random systems
    auto run_sys = [&](choice_system sys, int id, std::uint64_t seed0) {
      bool feasible = exhaustive_feasibility(choice_feasibility(sys), 1'000'000'000);
      auto ins = choice_function_instance(sys);
      for (int s = 0; s < 2; ++s) {
        exercise_small(rep, tally, *ins, seed0 + s, 10'000,
                       [&sys](const partial_assignment& st) {
                         return forbidden_choice_in(sys, st).has_value();
                       },
                       feasible, "choice #" + std::to_string(id));
      }
    };
    int id = 0;
    for (std::uint32_t n : {3u, 4u, 5u, 6u}) {
      for (std::uint32_t r : {2u, 3u, 4u}) {
        graph g = cycle_graph(n);
        run_sys(choice_system::proper_coloring(g.edges, g.n, r, 1.0 / r), id, 900 + 10 * id);
        ++id;
      }
    }
    rng64 rng(909);
    for (int i = 0; i < 48; ++i) {
      choice_system sys;
      std::uint32_t m = 3 + static_cast<std::uint32_t>(rng.below(4));
      for (std::uint32_t b = 0; b < m; ++b) {
        std::vector<double> block(2 + rng.below(2));
        for (auto& q : block) q = 0.1 + 0.9 * rng.unit();
        sys.marginals.push_back(std::move(block));
      }
      std::uint32_t sets = 2 + static_cast<std::uint32_t>(rng.below(3));
      for (std::uint32_t j = 0; j < sets; ++j) {
        std::uint32_t width = 2 + static_cast<std::uint32_t>(rng.below(2));
        std::vector<std::uint32_t> ids(m);
        for (std::uint32_t b = 0; b < m; ++b) ids[b] = b;
        for (std::size_t t = ids.size(); t > 1; --t) std::swap(ids[t - 1], ids[rng.below(t)]);
        ids.resize(width);
        std::sort(ids.begin(), ids.end());
        std::vector<std::pair<std::uint32_t, std::uint32_t>> fs;
        for (std::uint32_t b : ids)
          fs.emplace_back(b, static_cast<std::uint32_t>(rng.below(sys.marginals[b].size())));
        sys.forbidden.push_back(std::move(fs));
      }
      run_sys(std::move(sys), id++, 1100 + 10 * i);
    }
  }

  rep.require(tally.runs >= 1000,
              "only " + std::to_string(tally.runs) + " small instances exercised");
  rep.require(tally.terminated >= 500,
              "only " + std::to_string(tally.terminated) + " small runs terminated");
  rep.require(tally.infeasible >= 20,
              "only " + std::to_string(tally.infeasible) + " infeasible instances covered");
  rep.require(tally.steps_checked >= 100'000,
              "only " + std::to_string(tally.steps_checked) + " steps cross-checked");
}

// ---------------------------------------------------------------------------
// criterion 4: certificate versus grid search

void criterion4(reporter& rep) {
  const int grid = 2000;
  double min_margin = std::numeric_limits<double>::infinity();

  for (std::uint32_t k = 4; k <= 6; ++k) {
    for (std::uint32_t n = 3; n <= 30; ++n) {
      double h1_max = -std::numeric_limits<double>::infinity();
      for (int i = 1; i < grid; ++i) {
        double x = static_cast<double>(i) / grid;
        h1_max = std::max(h1_max, x - (n - 2) * x * x * x);
      }
      double big_c = binomial(n - 2, k - 2);
      double e = static_cast<double>(k * (k - 1) / 2);
      double h2_max = -std::numeric_limits<double>::infinity();
      for (int i = 1; i < grid; ++i) {
        double y = static_cast<double>(i) / grid;
        h2_max = std::max(h2_max, y - big_c * std::pow(y, e));
      }
      bool grid_certified = h1_max + h2_max >= 1.0;
      min_margin = std::min(min_margin, std::abs(h1_max + h2_max - 1.0));
      auto cert = ramsey_certify(k, n);
      if (grid_certified != cert.certified)
        rep.fail("grid and certificate disagree at k=" + std::to_string(k) +
                 " n=" + std::to_string(n));
    }
  }
  rep.require(min_margin >= 1e-4, "a grid decision sits within discretization error of the line");

  const std::map<std::uint32_t, std::uint32_t> frozen = {{3, 2},  {4, 3},  {5, 4},  {6, 5},
                                                         {7, 6},  {8, 8},  {9, 9},  {10, 10}};
  for (auto [k, expect] : frozen) {
    std::uint32_t got = ramsey_max_n(k);
    if (got != expect)
      rep.fail("largest certified n for k=" + std::to_string(k) + " is " + std::to_string(got) +
               ", expected " + std::to_string(expect));
  }

  for (std::uint32_t k = 4; k <= 6; ++k) {
    std::uint32_t n_star = ramsey_max_n(k);
    auto cert = ramsey_certify(k, std::max(3u, n_star));
    rep.require(cert.certified, "certificate fails at its own maximum for k=" + std::to_string(k));
    auto ins = ramsey_instance(n_star, k, cert.p);
    for (int s = 0; s < 20; ++s) {
      run_result res = run(*ins, 4000 + 100 * k + s, 10'000'000, false);
      if (res.report.status != run_status::terminated) {
        rep.fail("witness run k=" + std::to_string(k) + " seed " + std::to_string(s) + ": " +
                 run_status_name(res.report.status));
        continue;
      }
      if (check_ramsey_witness(n_star, k, values_of(res.report.final_state)))
        rep.fail("witness run k=" + std::to_string(k) + " produced a forbidden clique");
    }
  }
}

// ---------------------------------------------------------------------------
// criterion 5: explicit probability spaces

void criterion5(reporter& rep) {
  rng64 rng(505);
  // coin probabilities in {1/4, 3/8, 1/2}: all outcome masses are exact
  // dyadics, so the enumeration below carries no rounding at all
  const double coin_values[3] = {0.25, 0.375, 0.5};

  for (int space = 0; space < 100; ++space) {
    std::uint32_t m = 8 + static_cast<std::uint32_t>(rng.below(7));
    std::vector<double> p(m);
    for (auto& q : p) q = coin_values[rng.below(3)];

    std::size_t outcomes = std::size_t{1} << m;
    std::vector<double> mass(outcomes, 1.0);
    for (std::size_t mask = 0; mask < outcomes; ++mask)
      for (std::uint32_t c = 0; c < m; ++c)
        mass[mask] *= (mask >> c & 1) ? p[c] : 1.0 - p[c];

    std::uint32_t event_count = 3 + static_cast<std::uint32_t>(rng.below(4));
    std::vector<std::function<bool(std::size_t)>> events;
    double product_bound = 1.0;
    for (std::uint32_t ev = 0; ev < event_count; ++ev) {
      std::uint32_t width = 4 + static_cast<std::uint32_t>(rng.below(2));
      std::vector<std::uint32_t> coins(m);
      for (std::uint32_t c = 0; c < m; ++c) coins[c] = c;
      for (std::size_t t = coins.size(); t > 1; --t) std::swap(coins[t - 1], coins[rng.below(t)]);
      coins.resize(width);
      std::size_t heads_mask = 0;
      double pr = 1.0;
      for (std::uint32_t c : coins) {
        heads_mask |= std::size_t{1} << c;
        pr *= p[c];
      }
      events.emplace_back(
          [heads_mask](std::size_t i) { return (i & heads_mask) == heads_mask; });
      product_bound *= 1.0 - 2.0 * pr;  // weight mu = twice the event probability
    }

    double avoid = exact_event_enumeration(mass, events);
    if (!(avoid > 0.0))
      rep.fail("space " + std::to_string(space) + ": avoidance probability not positive");
    if (avoid < product_bound - 1e-12)
      rep.fail("space " + std::to_string(space) + ": enumeration " + std::to_string(avoid) +
               " under the product bound " + std::to_string(product_bound));
  }

  // two fair coins, events "first is heads" and "second is heads"
  std::vector<double> two_coins(4, 0.25);
  std::vector<std::function<bool(std::size_t)>> heads = {
      [](std::size_t i) { return (i & 1) != 0; },
      [](std::size_t i) { return (i & 2) != 0; },
  };
  double exact = exact_event_enumeration(two_coins, heads);
  rep.require(near(exact, 0.25, 1e-15), "two-coin avoidance is not exactly 1/4");

  rng64 mc(777);
  int avoided = 0;
  const int samples = 1000;
  for (int s = 0; s < samples; ++s) {
    bool h0 = mc.coin(0.5), h1 = mc.coin(0.5);
    if (!h0 && !h1) ++avoided;
  }
  double freq = static_cast<double>(avoided) / samples;
  // three sigmas of a Bernoulli(1/4) mean over 1000 samples
  rep.require(std::abs(freq - exact) <= 0.0411,
              "Monte Carlo estimate " + std::to_string(freq) + " outside three sigmas of 1/4");
}

// ---------------------------------------------------------------------------
// criterion 6: array inequality and corollary

void criterion6(reporter& rep) {
  rng64 rng(606);
  const std::vector<double> xs = {0.1, 1.0, 10.0, 50.0};

  for (int i = 0; i < 10'000; ++i) {
    std::size_t rows = 1 + rng.below(6);
    std::vector<std::vector<double>> a(rows);
    double total = 0.0;
    for (auto& row : a) {
      row.resize(1 + rng.below(6));
      for (auto& v : row) {
        v = rng.below(4) == 0 ? 0.0 : rng.unit();
        total += v;
      }
    }
    if (total <= 0.0) a[0][0] = 0.5 + 0.5 * rng.unit();
    auto res = array_theorem_check(a, xs);
    if (!res.holds_all) {
      rep.fail("array " + std::to_string(i) + " violates the inequality");
      break;
    }
  }

  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 10'000; ++i) {
    std::vector<double> a(1 + rng.below(40));
    double total = 0.0;
    for (auto& v : a) {
      v = rng.below(5) == 0 ? 0.0 : rng.unit();
      total += v;
    }
    if (total <= 0.0) a[0] = 0.5 + 0.5 * rng.unit();
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(5));
    auto res = corollary_supremum(a, k);
    min_margin = std::min(min_margin, res.sup - res.bound);
    if (!res.strict || res.sup - res.bound <= 1e-12) {
      rep.fail("sequence " + std::to_string(i) + " has windowed ratio at or under 1/(ek)");
      break;
    }
  }
  rep.require(min_margin > 1e-12, "corollary margin collapsed to zero");
  std::printf("  smallest corollary margin over 1/(ek): %.6g\n", min_margin);
}

// ---------------------------------------------------------------------------
// criterion 7: decode and bit-identical replay of the criterion-2 runs

void criterion7(reporter& rep, const c2_data& data) {
  rep.require(!data.runs.empty(), "no captured runs to replay");
  for (std::size_t i = 0; i < data.runs.size(); ++i) {
    const auto& cap = data.runs[i];
    if (!trace_decodes(cap.trace, initial_word(cap.trace.kind, cap.trace.slot_count))) {
      rep.fail("run " + std::to_string(i) + " (seed " + std::to_string(cap.seed) +
               "): trace does not decode");
      continue;
    }
    run_result again = run(*cap.ins, cap.seed, default_budget, true);
    if (json(again.trace) != json(cap.trace))
      rep.fail("run " + std::to_string(i) + " (seed " + std::to_string(cap.seed) +
               "): rerun trace differs");
    else if (json(again.report) != json(cap.report))
      rep.fail("run " + std::to_string(i) + " (seed " + std::to_string(cap.seed) +
               "): rerun report differs");
  }
}

}  // namespace

int main() {
  struct outcome {
    const char* label;
    bool ok;
  };
  std::vector<outcome> results;
  c2_data shared;

  auto timed = [&](int index, const char* label, const std::function<void(reporter&)>& fn) {
    reporter rep;
    auto t0 = std::chrono::steady_clock::now();
    fn(rep);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d (%s): %s [%.1fs]\n", index, label, rep.ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
    results.push_back({label, rep.ok});
  };

  timed(1, "closed forms", criterion1);
  timed(2, "solver success at scale", [&](reporter& r) { criterion2(r, shared); });
  timed(3, "oracle agreement on small instances", criterion3);
  timed(4, "certificate grid", criterion4);
  timed(5, "probability enumeration", criterion5);
  timed(6, "array inequality", criterion6);
  timed(7, "bit-identical replay", [&](reporter& r) { criterion7(r, shared); });

  bool all = true;
  for (const auto& r : results) all = all && r.ok;
  std::printf("%s\n", all ? "all criteria passed" : "acceptance failed");
  return all ? 0 : 1;
}
