#pragma once

// The resampling engine. A problem binds a monoid family to a state space:
// slots are filled in word order with fresh random values; whenever the fill
// exposes a violation, the instance names a repair element alpha, the slots of
// alpha*beta are erased, and its canonical word is prepended. The run
// terminates when the word empties, i.e. the state is total and goal-clean.
//
// Invariants the engine maintains (and tests verify):
//   - the word's letters are exactly the unfilled slots (multiset equality);
//   - before every fill the state satisfies the goal on its domain, which
//     justifies detecting only violations through the last filled slot;
//   - a skip shrinks the word by one, an event changes it by |alpha*beta|-1.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "assignment.hpp"
#include "condition.hpp"
#include "errors.hpp"
#include "monoid.hpp"
#include "rng.hpp"
#include "trace.hpp"

namespace lal {

/** Behavioral contract every solvable problem implements. */
class problem_instance {
 public:
  virtual ~problem_instance() = default;

  virtual std::string name() const = 0;
  virtual monoid_kind kind() const = 0;
  virtual std::uint32_t slot_count() const = 0;

  /** Draw a value for the slot; consumes exactly one rng output. */
  virtual std::int32_t sample(slot_id slot, const partial_assignment& state, rng64& rng) const = 0;

  /** Violation through the just-filled slot, if any; deterministic minimal witness. */
  virtual std::optional<witness_event> detect(const partial_assignment& state, slot_id last) const = 0;

  /** Goal predicate on the state's domain. */
  virtual bool goal(const partial_assignment& state) const = 0;

  virtual lal_condition_table condition_table() const = 0;
  virtual weight_function weights() const = 0;

  /** Slots cleared by an event: the canonical word of alpha*trigger. */
  virtual std::vector<slot_id> erase_set(const witness_event& e, const partial_assignment& state) const {
    if (kind() == monoid_kind::free_power) {
      std::uint64_t t = e.alpha.power + 1;
      std::vector<slot_id> out;
      for (std::size_t i = state.size(); i-- > 0 && out.size() < t;) {
        if (state.is_filled(static_cast<slot_id>(i))) out.push_back(static_cast<slot_id>(i));
      }
      return out;
    }
    monoid_element ab = mul_generator(e.alpha, e.trigger);
    return ab.slots;
  }
};

enum class run_status : std::uint8_t { terminated, budget_exhausted, sampling_failed, goal_failed };

inline const char* run_status_name(run_status s) {
  switch (s) {
    case run_status::terminated: return "terminated";
    case run_status::budget_exhausted: return "budget-exhausted";
    case run_status::sampling_failed: return "sampling-failed";
    case run_status::goal_failed: return "goal-check-failed";
  }
  return "unknown";
}

inline constexpr std::uint64_t default_budget = 10'000'000;

struct run_report {
  run_status status = run_status::budget_exhausted;
  bool terminated = false;
  std::uint64_t steps_used = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> events_by_class;
  partial_assignment final_state;
  std::string note;
};

struct run_result {
  run_report report;
  run_trace trace;
};

/**
 * One run. Deterministic given (instance, seed, budget): fills the head of
 * the word, detects, repairs. Budget exhaustion is a status, not an error.
 */
inline run_result run(const problem_instance& ins, std::uint64_t seed,
                      std::uint64_t budget = default_budget, bool keep_trace = true) {
  const std::uint32_t n = ins.slot_count();
  run_result out;
  out.report.seed = seed;
  out.trace.kind = ins.kind();
  out.trace.slot_count = n;
  out.trace.seed = seed;

  rng64 rng(seed);
  partial_assignment state(n);

  // word with head at the back (prepend = push_back)
  std::vector<slot_id> rword(n);
  if (ins.kind() == monoid_kind::powerset) {
    for (std::uint32_t i = 0; i < n; ++i) rword[i] = n - 1 - i;
  } else {
    std::fill(rword.begin(), rword.end(), 0);
  }

  std::uint64_t steps = 0;
  while (!rword.empty() && steps < budget) {
    slot_id beta = rword.back();
    rword.pop_back();
    if (ins.kind() == monoid_kind::free_power)
      beta = static_cast<slot_id>(state.filled_count());  // next position of the prefix

    std::int32_t value;
    try {
      value = ins.sample(beta, state, rng);
    } catch (const error& e) {
      out.report.status = run_status::sampling_failed;
      out.report.steps_used = steps;
      out.report.final_state = state;
      out.report.note = e.what();
      return out;
    }
    state.fill(beta, value);
    ++steps;

    std::optional<witness_event> ev = ins.detect(state, beta);
    if (ev) {
      out.report.events_by_class[ev->class_tag()] += 1;
      for (slot_id s : ins.erase_set(*ev, state)) state.erase(s);
      word u = canonical_preimage(mul_generator(ev->alpha, beta));
      for (std::size_t i = u.letters.size(); i-- > 0;) rword.push_back(u.letters[i]);
    }
    if (keep_trace) {
      trace_step ts;
      ts.slot = beta;
      ts.value = value;
      ts.event = ev;
      out.trace.steps.push_back(std::move(ts));
      out.trace.word_lengths.push_back(static_cast<std::uint32_t>(rword.size()));
    }
  }

  out.report.steps_used = steps;
  out.report.final_state = state;
  if (rword.empty()) {
    if (!ins.goal(state)) {
      out.report.status = run_status::goal_failed;
      out.report.note = "final state fails the goal predicate";
    } else {
      out.report.status = run_status::terminated;
      out.report.terminated = true;
    }
  } else {
    out.report.status = run_status::budget_exhausted;
  }
  return out;
}

struct aggregate_report {
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_steps = 0.0;
  std::uint64_t max_steps = 0;
  std::map<std::string, std::uint64_t> events_by_class;
  std::vector<run_report> reports;
};

inline unsigned env_thread_cap() {
  if (const char* s = std::getenv("LALKIT_MAX_THREADS")) {
    long v = std::strtol(s, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

inline aggregate_report aggregate_from_reports(std::vector<run_report> reports) {
  aggregate_report agg;
  agg.runs = reports.size();
  double total_steps = 0.0;
  for (auto& r : reports) {
    if (r.terminated) ++agg.successes;
    total_steps += static_cast<double>(r.steps_used);
    agg.max_steps = std::max(agg.max_steps, r.steps_used);
    for (const auto& [tag, c] : r.events_by_class) agg.events_by_class[tag] += c;
  }
  agg.success_rate = reports.empty() ? 0.0 : static_cast<double>(agg.successes) / reports.size();
  agg.mean_steps = reports.empty() ? 0.0 : total_steps / reports.size();
  agg.reports = std::move(reports);
  return agg;
}

/**
 * Independent runs over a seed list. threads = 0 means "up to the
 * LALKIT_MAX_THREADS cap"; results are seed-deterministic regardless of the
 * thread count and aggregated in seed order.
 */
inline aggregate_report run_many(const problem_instance& ins, const std::vector<std::uint64_t>& seeds,
                                 std::uint64_t budget = default_budget, unsigned threads = 0) {
  if (threads == 0) threads = env_thread_cap();
  threads = std::max(1u, std::min<unsigned>(threads, std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1));
  std::vector<run_report> reports(seeds.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < seeds.size(); i += stride)
      reports[i] = run(ins, seeds[i], budget, /*keep_trace=*/false).report;
  };
  if (threads <= 1 || seeds.size() <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return aggregate_from_reports(std::move(reports));
}

}  // namespace lal
