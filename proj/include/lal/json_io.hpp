#pragma once

// JSON encodings with stable field names, the experiment configuration, and
// the config-driven instance factory shared by the CLI and the test drivers.
// Reports and traces round-trip; a config re-creates the exact instance it
// described (random families are seeded from seed_base).

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "assignment.hpp"
#include "condition.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "monoid.hpp"
#include "problems/acyclic_edge.hpp"
#include "problems/choice_function.hpp"
#include "problems/nonrep_coloring.hpp"
#include "problems/nonrep_sequence.hpp"
#include "problems/proper_coloring.hpp"
#include "problems/ramsey.hpp"
#include "series.hpp"
#include "thresholds.hpp"
#include "trace.hpp"
#include "validate.hpp"

namespace lal {

using nlohmann::json;

inline const char* monoid_kind_name(monoid_kind k) {
  return k == monoid_kind::powerset ? "powerset" : "free";
}

inline monoid_kind monoid_kind_from_name(const std::string& s) {
  if (s == "powerset") return monoid_kind::powerset;
  if (s == "free") return monoid_kind::free_power;
  fail(errc::parse_error, "unknown monoid kind '" + s + "'");
}

inline const char* event_kind_name(witness_event::kind_t k) {
  switch (k) {
    case witness_event::kind_t::proper_conflict: return "proper-conflict";
    case witness_event::kind_t::adjacent_same_color: return "adjacent-same-color";
    case witness_event::kind_t::bichromatic_4cycle: return "bichromatic-4cycle";
    case witness_event::kind_t::bichromatic_cycle: return "bichromatic-cycle";
    case witness_event::kind_t::blue_triangle: return "blue-triangle";
    case witness_event::kind_t::red_clique: return "red-clique";
    case witness_event::kind_t::repeated_block: return "repeated-block";
    case witness_event::kind_t::repetitive_path: return "repetitive-path";
    case witness_event::kind_t::forbidden_choice: return "forbidden-choice";
  }
  return "unknown";
}

inline witness_event::kind_t event_kind_from_name(const std::string& s) {
  using k = witness_event::kind_t;
  for (k v : {k::proper_conflict, k::adjacent_same_color, k::bichromatic_4cycle,
              k::bichromatic_cycle, k::blue_triangle, k::red_clique, k::repeated_block,
              k::repetitive_path, k::forbidden_choice}) {
    if (s == event_kind_name(v)) return v;
  }
  fail(errc::parse_error, "unknown event kind '" + s + "'");
}

inline void to_json(json& j, const monoid_element& e) {
  j = json{{"kind", monoid_kind_name(e.kind)}, {"slots", e.slots}, {"power", e.power}};
}

inline void from_json(const json& j, monoid_element& e) {
  e.kind = monoid_kind_from_name(j.at("kind").get<std::string>());
  e.slots = j.value("slots", std::vector<slot_id>{});
  e.power = j.value("power", std::uint64_t{0});
}

inline void to_json(json& j, const witness_event& e) {
  j = json{{"kind", event_kind_name(e.kind)}, {"class", e.class_tag()}, {"param", e.param},
           {"alpha", e.alpha},               {"trigger", e.trigger},   {"witness", e.witness}};
}

inline void from_json(const json& j, witness_event& e) {
  e.kind = event_kind_from_name(j.at("kind").get<std::string>());
  e.param = j.value("param", 0u);
  e.alpha = j.at("alpha").get<monoid_element>();
  e.trigger = j.value("trigger", slot_id{0});
  e.witness = j.value("witness", std::vector<slot_id>{});
}

inline void to_json(json& j, const trace_step& s) {
  j = json{{"slot", s.slot}, {"value", s.value}};
  if (s.event)
    j["event"] = *s.event;
  else
    j["event"] = nullptr;
}

inline void from_json(const json& j, trace_step& s) {
  s.slot = j.at("slot").get<slot_id>();
  s.value = j.at("value").get<std::int32_t>();
  if (j.contains("event") && !j.at("event").is_null())
    s.event = j.at("event").get<witness_event>();
  else
    s.event.reset();
}

inline void to_json(json& j, const run_trace& t) {
  j = json{{"kind", monoid_kind_name(t.kind)},
           {"slot_count", t.slot_count},
           {"seed", t.seed},
           {"steps", t.steps},
           {"word_lengths", t.word_lengths}};
}

inline void from_json(const json& j, run_trace& t) {
  t.kind = monoid_kind_from_name(j.at("kind").get<std::string>());
  t.slot_count = j.at("slot_count").get<std::uint32_t>();
  t.seed = j.at("seed").get<std::uint64_t>();
  t.steps = j.at("steps").get<std::vector<trace_step>>();
  t.word_lengths = j.value("word_lengths", std::vector<std::uint32_t>{});
}

inline void to_json(json& j, const partial_assignment& x) {
  j = json{{"values", x.raw_values()}, {"filled", x.raw_filled()}};
}

inline void from_json(const json& j, partial_assignment& x) {
  auto values = j.at("values").get<std::vector<std::int32_t>>();
  auto filled = j.at("filled").get<std::vector<std::uint8_t>>();
  if (values.size() != filled.size()) fail(errc::parse_error, "values/filled length mismatch");
  x = partial_assignment(values.size());
  for (slot_id i = 0; i < values.size(); ++i)
    if (filled[i]) x.fill(i, values[i]);
}

inline void to_json(json& j, const run_report& r) {
  j = json{{"status", run_status_name(r.status)},
           {"terminated", r.terminated},
           {"steps_used", r.steps_used},
           {"seed", r.seed},
           {"events_by_class", r.events_by_class},
           {"final_state", r.final_state},
           {"note", r.note}};
}

inline void from_json(const json& j, run_report& r) {
  const std::string status = j.at("status").get<std::string>();
  r.status = run_status::budget_exhausted;
  for (run_status s : {run_status::terminated, run_status::budget_exhausted,
                       run_status::sampling_failed, run_status::goal_failed}) {
    if (status == run_status_name(s)) r.status = s;
  }
  r.terminated = j.at("terminated").get<bool>();
  r.steps_used = j.at("steps_used").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.events_by_class = j.value("events_by_class", std::map<std::string, std::uint64_t>{});
  r.final_state = j.at("final_state").get<partial_assignment>();
  r.note = j.value("note", std::string{});
}

inline void to_json(json& j, const aggregate_report& a) {
  j = json{{"runs", a.runs},
           {"successes", a.successes},
           {"success_rate", a.success_rate},
           {"mean_steps", a.mean_steps},
           {"max_steps", a.max_steps},
           {"events_by_class", a.events_by_class}};
}

inline void to_json(json& j, const condition_slack& s) {
  j = json{{"beta", s.beta}, {"label", s.label}, {"weight", s.weight}, {"rhs", s.rhs},
           {"slack", s.slack}};
}

inline void to_json(json& j, const condition_report& r) {
  j = json{{"slacks", r.slacks}, {"min_slack", r.min_slack}, {"tolerance", r.tolerance},
           {"holds", r.holds}};
}

inline void to_json(json& j, const fixpoint_result& r) {
  j = json{{"feasible", r.feasible}, {"best_f", r.best_f}, {"residual", r.residual}};
}

inline void to_json(json& j, const ramsey_certificate& c) {
  j = json{{"certified", c.certified},
           {"n", c.n},
           {"k", c.k},
           {"x_star", c.x_star},
           {"y_star", c.y_star},
           {"h1", c.h1},
           {"h2", c.h2},
           {"p", c.p},
           {"f", c.f},
           {"clique_count", c.clique_count},
           {"clique_edges", c.clique_edges},
           {"clique_class_empty", c.clique_class_empty}};
}

// ---------------------------------------------------------------------------
// experiment configuration

struct experiment_config {
  std::string problem;       // proper | nonrep-seq | nonrep-color | acyclic | ramsey | choice
  std::string graph_file;    // edge-list path; empty means use the family fields
  std::string family = "path";  // path | cycle | complete | random-regular | random-tree
  std::uint32_t n = 0;
  std::uint32_t d = 0;       // degree (random-regular) or degree bound (random-tree)
  std::uint32_t colors = 0;
  std::string strategy;      // acyclic: restricted (default) | uniform
  std::uint32_t alphabet = 0;
  std::uint32_t k = 0;
  double p = 0.0;            // ramsey edge probability / choice marginal
  std::vector<std::uint64_t> seeds;
  std::uint32_t seed_count = 1;
  std::uint64_t seed_base = 0;
  std::uint64_t budget = default_budget;
  std::string out;

  std::vector<std::uint64_t> resolved_seeds() const {
    if (!seeds.empty()) return seeds;
    std::vector<std::uint64_t> out_seeds;
    out_seeds.reserve(seed_count);
    for (std::uint32_t i = 0; i < seed_count; ++i) out_seeds.push_back(seed_base + i);
    return out_seeds;
  }

  friend bool operator==(const experiment_config& a, const experiment_config& b) {
    return a.problem == b.problem && a.graph_file == b.graph_file && a.family == b.family &&
           a.n == b.n && a.d == b.d && a.colors == b.colors && a.strategy == b.strategy &&
           a.alphabet == b.alphabet && a.k == b.k && a.p == b.p && a.seeds == b.seeds &&
           a.seed_count == b.seed_count && a.seed_base == b.seed_base && a.budget == b.budget &&
           a.out == b.out;
  }
};

inline void to_json(json& j, const experiment_config& c) {
  j = json{{"problem", c.problem},
           {"graph", c.graph_file},
           {"family", c.family},
           {"n", c.n},
           {"d", c.d},
           {"colors", c.colors},
           {"strategy", c.strategy},
           {"alphabet", c.alphabet},
           {"k", c.k},
           {"p", c.p},
           {"seeds", c.seeds},
           {"seed_count", c.seed_count},
           {"seed_base", c.seed_base},
           {"budget", c.budget},
           {"out", c.out}};
}

inline void from_json(const json& j, experiment_config& c) {
  c.problem = j.value("problem", std::string{});
  c.graph_file = j.value("graph", std::string{});
  c.family = j.value("family", std::string{"path"});
  c.n = j.value("n", 0u);
  c.d = j.value("d", 0u);
  c.colors = j.value("colors", 0u);
  c.strategy = j.value("strategy", std::string{});
  c.alphabet = j.value("alphabet", 0u);
  c.k = j.value("k", 0u);
  c.p = j.value("p", 0.0);
  c.seeds = j.value("seeds", std::vector<std::uint64_t>{});
  c.seed_count = j.value("seed_count", 1u);
  c.seed_base = j.value("seed_base", std::uint64_t{0});
  c.budget = j.value("budget", default_budget);
  c.out = j.value("out", std::string{});
}

// ---------------------------------------------------------------------------
// instance factory

inline graph graph_from_config(const experiment_config& cfg) {
  if (!cfg.graph_file.empty()) {
    std::ifstream in(cfg.graph_file);
    if (!in) fail(errc::parse_error, "cannot open graph file '" + cfg.graph_file + "'");
    return parse_edge_list(in);
  }
  if (cfg.n == 0) fail(errc::bad_argument, "graph family needs --n");
  if (cfg.family == "path") return path_graph(cfg.n);
  if (cfg.family == "cycle") return cycle_graph(cfg.n);
  if (cfg.family == "complete") return complete_graph(cfg.n);
  if (cfg.family == "random-regular") return random_regular_graph(cfg.n, cfg.d, cfg.seed_base);
  if (cfg.family == "random-tree") return random_bounded_tree(cfg.n, cfg.d, cfg.seed_base);
  fail(errc::bad_argument, "unknown graph family '" + cfg.family + "'");
}

inline acyclic_strategy strategy_from_config(const experiment_config& cfg) {
  if (cfg.strategy.empty() || cfg.strategy == "restricted") return acyclic_strategy::restricted;
  if (cfg.strategy == "uniform") return acyclic_strategy::uniform;
  fail(errc::bad_argument, "unknown strategy '" + cfg.strategy + "'");
}

inline choice_system choice_system_from_config(const experiment_config& cfg) {
  if (cfg.colors == 0) fail(errc::bad_argument, "choice needs --colors");
  if (!(cfg.p > 0.0) || !(cfg.p <= 1.0)) fail(errc::bad_argument, "choice needs a marginal --p in (0,1]");
  graph g = graph_from_config(cfg);
  return choice_system::proper_coloring(g.edges, g.n, cfg.colors, cfg.p);
}

inline std::unique_ptr<problem_instance> instance_from_config(const experiment_config& cfg) {
  if (cfg.problem == "proper") {
    if (cfg.colors == 0) fail(errc::bad_argument, "proper coloring needs --colors");
    return proper_coloring_instance(graph_from_config(cfg), cfg.colors);
  }
  if (cfg.problem == "nonrep-seq") {
    if (cfg.n == 0 || cfg.alphabet == 0) fail(errc::bad_argument, "nonrep-seq needs --n and --alphabet");
    return nonrep_sequence_instance(list_system::uniform(cfg.n, cfg.alphabet));
  }
  if (cfg.problem == "nonrep-color") {
    if (cfg.colors == 0) fail(errc::bad_argument, "nonrep-color needs --colors");
    return nonrep_coloring_instance(graph_from_config(cfg), cfg.colors);
  }
  if (cfg.problem == "acyclic") {
    if (cfg.colors == 0) fail(errc::bad_argument, "acyclic needs --colors");
    return acyclic_edge_instance(graph_from_config(cfg), cfg.colors, strategy_from_config(cfg));
  }
  if (cfg.problem == "ramsey") {
    if (cfg.n == 0 || cfg.k == 0) fail(errc::bad_argument, "ramsey needs --n and --k");
    double p = cfg.p;
    if (p == 0.0) {
      ramsey_certificate cert = ramsey_certify(cfg.k, cfg.n);
      p = cert.p;
    }
    return ramsey_instance(cfg.n, cfg.k, p);
  }
  if (cfg.problem == "choice") return choice_function_instance(choice_system_from_config(cfg));
  fail(errc::bad_argument, "unknown problem '" + cfg.problem + "'");
}

// ---------------------------------------------------------------------------
// report validation

namespace detail {

inline std::string join_ids(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace detail

/**
 * Re-check a final state against the independent validator for the problem
 * the config describes; nullopt means clean, otherwise a witness description.
 * The exhaustive path search is allowed at the instance's own size: whoever
 * solved the instance already paid that cost.
 */
inline std::optional<std::string> validate_final_state(const experiment_config& cfg,
                                                       const partial_assignment& state) {
  if (cfg.problem == "proper") {
    graph g = graph_from_config(cfg);
    if (auto w = check_proper_coloring(g, state))
      return "edge (" + std::to_string(w->first) + "," + std::to_string(w->second) +
             ") is monochromatic";
    return std::nullopt;
  }
  if (cfg.problem == "nonrep-seq") {
    if (!state.total()) fail(errc::incomplete_coloring, "sequence leaves positions unfilled");
    if (auto w = repetition_in(state))
      return "repeated block at s=" + std::to_string(w->s) + " t=" + std::to_string(w->t);
    return std::nullopt;
  }
  if (cfg.problem == "nonrep-color") {
    graph g = graph_from_config(cfg);
    if (auto w = check_nonrepetitive_coloring(g, state, std::max(30u, g.n)))
      return "repetitively colored path [" + detail::join_ids(*w) + "]";
    return std::nullopt;
  }
  if (cfg.problem == "acyclic") {
    graph g = graph_from_config(cfg);
    if (auto w = check_acyclic_edge_coloring(g, state)) {
      if (w->adjacent)
        return "adjacent edges " + detail::join_ids(w->edges) + " share color " +
               std::to_string(w->colors[0]);
      return "bichromatic cycle on colors (" + std::to_string(w->colors[0]) + "," +
             std::to_string(w->colors[1]) + "): edges [" + detail::join_ids(w->edges) + "]";
    }
    return std::nullopt;
  }
  if (cfg.problem == "ramsey") {
    if (auto w = check_ramsey_witness(cfg.n, cfg.k, state)) {
      const char* what = w->color == 1 ? "blue triangle" : "red clique";
      return std::string(what) + " on vertices [" + detail::join_ids(w->vertices) + "]";
    }
    return std::nullopt;
  }
  if (cfg.problem == "choice") {
    choice_system sys = choice_system_from_config(cfg);
    if (auto w = check_choice_function(sys, state))
      return "forbidden partial choice " + std::to_string(*w) + " fully selected";
    return std::nullopt;
  }
  fail(errc::bad_argument, "unknown problem '" + cfg.problem + "'");
}

}  // namespace lal
