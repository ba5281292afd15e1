// lalkit: resampling solvers and weight-inequality tools for local action
// systems. Subcommands: solve, check-condition (alias check), threshold,
// validate, replay. Exit codes: 0 success, 1 domain failure, 2 usage or
// parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lal/json_io.hpp>

namespace {

using lal::experiment_config;
using lal::json;

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) lal::fail(lal::errc::parse_error, "cannot open output file '" + path + "'");
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) lal::fail(lal::errc::parse_error, "cannot open input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    lal::fail(lal::errc::parse_error, std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return j;
}

struct check_params {
  std::string problem;
  std::uint32_t delta = 0;
  std::uint32_t colors = 0;
  std::uint32_t alphabet = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  double p = 0.0;
  std::string strategy;
  double weight = 0.0;  // 0 = use the problem's own weight
};

lal::acyclic_strategy parse_strategy(const std::string& s) {
  if (s.empty() || s == "restricted") return lal::acyclic_strategy::restricted;
  if (s == "uniform") return lal::acyclic_strategy::uniform;
  lal::fail(lal::errc::bad_argument, "unknown strategy '" + s + "'");
}

int run_solve(experiment_config cfg, const std::string& trace_path) {
  auto ins = lal::instance_from_config(cfg);
  const auto seeds = cfg.resolved_seeds();
  if (seeds.empty()) lal::fail(lal::errc::bad_argument, "no seeds requested");

  lal::aggregate_report agg;
  std::vector<lal::run_trace> traces;
  if (trace_path.empty()) {
    agg = lal::run_many(*ins, seeds, cfg.budget);
  } else {
    std::vector<lal::run_report> reports;
    for (std::uint64_t s : seeds) {
      auto res = lal::run(*ins, s, cfg.budget, /*keep_trace=*/true);
      reports.push_back(std::move(res.report));
      traces.push_back(std::move(res.trace));
    }
    agg = lal::aggregate_from_reports(std::move(reports));
  }

  bool all_ok = true;
  for (const auto& rep : agg.reports) {
    if (!rep.terminated) {
      all_ok = false;
      std::cout << "seed " << rep.seed << ": " << lal::run_status_name(rep.status)
                << (rep.note.empty() ? "" : " (" + rep.note + ")") << "\n";
      continue;
    }
    if (auto witness = lal::validate_final_state(cfg, rep.final_state)) {
      all_ok = false;
      std::cout << "seed " << rep.seed << ": validator rejected the final state: " << *witness
                << "\n";
    }
  }
  std::printf("%s: runs=%zu successes=%zu success_rate=%.3f mean_steps=%.1f max_steps=%llu\n",
              ins->name().c_str(), agg.runs, agg.successes, agg.success_rate, agg.mean_steps,
              static_cast<unsigned long long>(agg.max_steps));

  if (!cfg.out.empty()) {
    json j{{"config", cfg}, {"aggregate", agg}, {"reports", agg.reports}};
    write_json_file(cfg.out, j);
  }
  if (!trace_path.empty()) {
    json j{{"config", cfg}, {"traces", traces}};
    write_json_file(trace_path, j);
  }
  return all_ok ? 0 : 1;
}

int run_check(const check_params& prm, const std::string& out) {
  lal::lal_condition_table table;
  lal::weight_function weights = lal::weight_function::constant(1.0);
  if (prm.problem == "proper") {
    table = lal::proper_coloring_table(prm.delta, prm.colors);
    weights = lal::weight_function::constant(lal::proper_coloring_weight(prm.delta, prm.colors));
  } else if (prm.problem == "nonrep-seq") {
    std::uint32_t a = prm.alphabet ? prm.alphabet : 4;
    table = lal::nonrep_sequence_table(a);
    weights = lal::weight_function::constant(lal::nonrep_sequence_weight(a));
  } else if (prm.problem == "nonrep-color") {
    table = lal::nonrep_coloring_table(prm.delta, prm.colors);
    weights = lal::weight_function::constant(lal::nonrep_coloring_weight(prm.delta, prm.colors));
  } else if (prm.problem == "acyclic") {
    auto strat = parse_strategy(prm.strategy);
    table = lal::acyclic_edge_table(prm.delta, prm.colors, strat);
    weights = lal::weight_function::constant(lal::acyclic_edge_weight(prm.delta, prm.colors, strat));
  } else if (prm.problem == "ramsey") {
    if (prm.k == 0 || prm.n == 0) lal::fail(lal::errc::bad_argument, "ramsey needs --k and --n");
    auto cert = lal::ramsey_certify(prm.k, prm.n);
    double p = prm.p > 0.0 ? prm.p : cert.p;
    table = lal::ramsey_table(prm.n, prm.k, p);
    weights = lal::weight_function::constant(cert.f);
  } else if (prm.problem == "choice") {
    experiment_config cfg;
    cfg.problem = "choice";
    cfg.family = "cycle";
    cfg.n = prm.n;
    cfg.colors = prm.colors;
    cfg.p = prm.p;
    auto sys = lal::choice_system_from_config(cfg);
    table = lal::choice_function_table(sys);
    weights = lal::choice_function_weights(sys);
  } else {
    lal::fail(lal::errc::bad_argument, "unknown problem '" + prm.problem + "'");
  }
  if (prm.weight > 0.0) weights = lal::weight_function::constant(prm.weight);

  lal::condition_report rep;
  try {
    rep = lal::check_lal_inequality(weights, table);
  } catch (const lal::error& e) {
    if (e.code() != lal::errc::overflow) throw;
    std::cout << "condition fails: " << e.what() << "\n";
    return 1;
  }
  for (const auto& s : rep.slacks)
    std::printf("%-48s f=%-12.9g rhs=%-12.9g slack=%.9g\n", s.label.c_str(), s.weight, s.rhs,
                s.slack);
  std::printf("min_slack=%.9g condition %s\n", rep.min_slack, rep.holds ? "holds" : "fails");
  if (!table.note.empty()) std::cout << "note: " << table.note << "\n";
  if (!out.empty()) write_json_file(out, json{{"problem", prm.problem}, {"report", rep}});
  return rep.holds ? 0 : 1;
}

int run_threshold(const check_params& prm, const std::string& out) {
  json j{{"problem", prm.problem}};
  if (prm.problem == "nonrep-color") {
    std::uint64_t c = lal::nonrep_color_threshold(prm.delta);
    std::printf("nonrep-color threshold for max degree %u: %llu colors\n", prm.delta,
                static_cast<unsigned long long>(c));
    j["delta"] = prm.delta;
    j["colors"] = c;
  } else if (prm.problem == "ramsey") {
    if (prm.k == 0) lal::fail(lal::errc::bad_argument, "ramsey needs --k");
    std::uint32_t n_star = lal::ramsey_max_n(prm.k);
    auto cert = lal::ramsey_certify(prm.k, std::max(3u, n_star));
    std::printf("ramsey max certified n for k=%u: n*=%u (x*=%.9g y*=%.9g p*=%.9g f=%.9g)\n", prm.k,
                n_star, cert.x_star, cert.y_star, cert.p, cert.f);
    j["k"] = prm.k;
    j["n_star"] = n_star;
    j["certificate"] = cert;
  } else if (prm.problem == "nonrep-seq") {
    std::uint32_t a = prm.alphabet ? prm.alphabet : 4;
    auto fix = lal::solve_series_fixpoint(lal::generator_series(lal::nonrep_sequence_table(a)));
    if (!fix.feasible) lal::fail(lal::errc::bad_argument, "no feasible weight for alphabet size " + std::to_string(a));
    std::printf("nonrep-seq fixpoint weight for alphabet %u: f=%.9g (residual %.3g)\n", a,
                fix.best_f, fix.residual);
    j["alphabet"] = a;
    j["fixpoint"] = fix;
  } else if (prm.problem == "acyclic") {
    auto strat = parse_strategy(prm.strategy);
    auto spec = lal::generator_series(lal::acyclic_edge_table(prm.delta, prm.colors, strat));
    auto fix = lal::solve_series_fixpoint(spec);
    if (!fix.feasible)
      lal::fail(lal::errc::bad_argument, "no feasible weight for delta=" + std::to_string(prm.delta) +
                                             " colors=" + std::to_string(prm.colors));
    std::printf("acyclic (%s) fixpoint weight for delta=%u colors=%u: f=%.9g (residual %.3g)\n",
                lal::acyclic_strategy_name(strat), prm.delta, prm.colors, fix.best_f, fix.residual);
    j["delta"] = prm.delta;
    j["colors"] = prm.colors;
    j["strategy"] = lal::acyclic_strategy_name(strat);
    j["fixpoint"] = fix;
  } else {
    lal::fail(lal::errc::bad_argument, "unknown problem '" + prm.problem + "'");
  }
  if (!out.empty()) write_json_file(out, j);
  return 0;
}

int run_validate(const std::string& in_path) {
  json j = read_json_file(in_path);
  experiment_config cfg;
  std::vector<lal::run_report> reports;
  try {
    cfg = j.at("config").get<experiment_config>();
    reports = j.at("reports").get<std::vector<lal::run_report>>();
  } catch (const json::exception& e) {
    lal::fail(lal::errc::parse_error, std::string("report file missing fields: ") + e.what());
  }
  bool all_ok = !reports.empty();
  for (const auto& rep : reports) {
    if (!rep.terminated) {
      std::cout << "seed " << rep.seed << ": run did not terminate ("
                << lal::run_status_name(rep.status) << ")\n";
      all_ok = false;
      continue;
    }
    if (auto witness = lal::validate_final_state(cfg, rep.final_state)) {
      std::cout << "seed " << rep.seed << ": " << *witness << "\n";
      all_ok = false;
    } else {
      std::cout << "seed " << rep.seed << ": valid\n";
    }
  }
  if (reports.empty()) std::cout << "no reports in '" << in_path << "'\n";
  return all_ok ? 0 : 1;
}

int run_replay(const std::string& in_path) {
  json j = read_json_file(in_path);
  experiment_config cfg;
  std::vector<lal::run_trace> traces;
  try {
    cfg = j.at("config").get<experiment_config>();
    traces = j.at("traces").get<std::vector<lal::run_trace>>();
  } catch (const json::exception& e) {
    lal::fail(lal::errc::parse_error, std::string("trace file missing fields: ") + e.what());
  }
  auto ins = lal::instance_from_config(cfg);
  bool all_ok = !traces.empty();
  for (const auto& trace : traces) {
    if (!lal::trace_decodes(trace, lal::initial_word(trace.kind, trace.slot_count))) {
      std::cout << "seed " << trace.seed << ": trace does not decode\n";
      all_ok = false;
      continue;
    }
    auto res = lal::run(*ins, trace.seed, cfg.budget, /*keep_trace=*/true);
    if (json(res.trace) != json(trace)) {
      std::cout << "seed " << trace.seed << ": rerun diverged from the recorded trace\n";
      all_ok = false;
      continue;
    }
    std::cout << "seed " << trace.seed << ": decodes, rerun identical (" << trace.steps.size()
              << " steps)\n";
  }
  if (traces.empty()) std::cout << "no traces in '" << in_path << "'\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resampling solvers and weight-inequality tools for local action systems"};
  app.require_subcommand(1);

  std::uint64_t seed_base = 0;
  std::uint64_t budget = lal::default_budget;
  std::string out;
  app.add_option("--seed-base", seed_base, "first seed (seeds are seed-base, seed-base+1, ...)");
  app.add_option("--budget", budget, "step budget per run");
  app.add_option("--out", out, "write a JSON result file");

  experiment_config cfg;
  std::string trace_path, config_path;
  auto* solve = app.add_subcommand("solve", "run the resampling engine and validate the results");
  solve->fallthrough();
  solve->add_option("--problem", cfg.problem,
                    "proper | nonrep-seq | nonrep-color | acyclic | ramsey | choice");
  solve->add_option("--config", config_path, "load an experiment config JSON instead of flags");
  solve->add_option("--graph", cfg.graph_file, "edge-list file (lines 'u v', 0-indexed)");
  solve->add_option("--family", cfg.family,
                    "graph family: path | cycle | complete | random-regular | random-tree");
  solve->add_option("--n", cfg.n, "vertex count / sequence length");
  solve->add_option("--d", cfg.d, "degree (random-regular) or degree bound (random-tree)");
  solve->add_option("--colors", cfg.colors, "palette size");
  solve->add_option("--strategy", cfg.strategy, "acyclic sampler: restricted | uniform");
  solve->add_option("--alphabet", cfg.alphabet, "list size for nonrep-seq");
  solve->add_option("--k", cfg.k, "red clique order (ramsey)");
  solve->add_option("--p", cfg.p, "blue probability (ramsey) / marginal (choice)");
  solve->add_option("--seeds", cfg.seed_count, "number of seeds");
  solve->add_option("--trace", trace_path, "also write per-seed traces to this JSON file");

  check_params prm;
  auto* check = app.add_subcommand("check-condition", "evaluate the generator weight inequalities");
  check->alias("check");
  check->fallthrough();
  check->add_option("--problem", prm.problem, "problem tag")->required();
  check->add_option("--delta", prm.delta, "maximum degree");
  check->add_option("--colors", prm.colors, "palette size");
  check->add_option("--alphabet", prm.alphabet, "list size (nonrep-seq)");
  check->add_option("--k", prm.k, "red clique order (ramsey)");
  check->add_option("--n", prm.n, "vertex / cycle length");
  check->add_option("--p", prm.p, "blue probability (ramsey) / marginal (choice)");
  check->add_option("--strategy", prm.strategy, "acyclic sampler strategy");
  check->add_option("--f", prm.weight, "check at this uniform weight instead of the problem's own");

  check_params tprm;
  auto* thr = app.add_subcommand("threshold", "critical parameters and fixpoint weights");
  thr->fallthrough();
  thr->add_option("--problem", tprm.problem, "nonrep-color | ramsey | nonrep-seq | acyclic")
      ->required();
  thr->add_option("--delta", tprm.delta, "maximum degree");
  thr->add_option("--colors", tprm.colors, "palette size (acyclic)");
  thr->add_option("--alphabet", tprm.alphabet, "list size (nonrep-seq)");
  thr->add_option("--k", tprm.k, "red clique order (ramsey)");
  thr->add_option("--strategy", tprm.strategy, "acyclic sampler strategy");

  std::string validate_in;
  auto* val = app.add_subcommand("validate", "re-check a solve report with the independent validators");
  val->fallthrough();
  val->add_option("--in", validate_in, "report JSON written by solve")->required();

  std::string replay_in;
  auto* rpl = app.add_subcommand("replay", "decode traces and re-run them bit-identically");
  rpl->fallthrough();
  rpl->add_option("--in", replay_in, "trace JSON written by solve --trace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) {
      if (!config_path.empty()) {
        if (!cfg.problem.empty())
          lal::fail(lal::errc::bad_argument, "use either --config or problem flags, not both");
        cfg = read_json_file(config_path).get<experiment_config>();
      }
      if (cfg.problem.empty()) lal::fail(lal::errc::bad_argument, "solve needs --problem or --config");
      if (config_path.empty() || app.count("--seed-base")) cfg.seed_base = seed_base;
      if (config_path.empty() || app.count("--budget")) cfg.budget = budget;
      if (config_path.empty() || app.count("--out")) cfg.out = out;
      return run_solve(cfg, trace_path);
    }
    if (check->parsed()) return run_check(prm, out);
    if (thr->parsed()) return run_threshold(tprm, out);
    if (val->parsed()) return run_validate(validate_in);
    if (rpl->parsed()) return run_replay(replay_in);
  } catch (const lal::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == lal::errc::parse_error ? 2 : 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
