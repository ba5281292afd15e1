#pragma once

// Violation witnesses and run traces. A trace records, per elementary step,
// the slot filled, the value drawn, and the violation event if one fired,
// plus the word length after the step; trace_decodes replays the word
// evolution and confirms the recorded lengths.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoid.hpp"

namespace lal {

struct witness_event {
  // Ordered by detection priority within a problem; the comparison below
  // makes engine runs deterministic.
  enum class kind_t : std::uint8_t {
    proper_conflict,
    adjacent_same_color,
    bichromatic_4cycle,
    bichromatic_cycle,
    blue_triangle,
    red_clique,
    repeated_block,
    repetitive_path,
    forbidden_choice,
  };

  kind_t kind = kind_t::proper_conflict;
  std::uint32_t param = 0;         // block/half length t, cycle half-length, forbidden index
  monoid_element alpha;            // repair element
  slot_id trigger = 0;             // slot whose fill exposed the violation
  std::vector<slot_id> witness;    // slots of the violating structure

  std::string class_tag() const {
    switch (kind) {
      case kind_t::proper_conflict: return "proper-conflict";
      case kind_t::adjacent_same_color: return "adjacent-same-color";
      case kind_t::bichromatic_4cycle: return "bichromatic-4cycle";
      case kind_t::bichromatic_cycle: return "bichromatic-cycle-" + std::to_string(2 * param);
      case kind_t::blue_triangle: return "blue-triangle";
      case kind_t::red_clique: return "red-clique";
      case kind_t::repeated_block: return "repeated-block-" + std::to_string(param);
      case kind_t::repetitive_path: return "repetitive-path-" + std::to_string(2 * param);
      case kind_t::forbidden_choice: return "forbidden-choice";
    }
    return "unknown";
  }
};

/** Witness order: class, then structure size parameter, then slot list. */
inline bool witness_less(const witness_event& a, const witness_event& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.param != b.param) return a.param < b.param;
  return a.witness < b.witness;
}

struct trace_step {
  slot_id slot = 0;
  std::int32_t value = 0;
  std::optional<witness_event> event;
};

struct run_trace {
  monoid_kind kind = monoid_kind::powerset;
  std::uint32_t slot_count = 0;
  std::uint64_t seed = 0;
  std::vector<trace_step> steps;
  std::vector<std::uint32_t> word_lengths;  // |w_k| after each step
};

/** The engine's starting word: every slot ascending / generator^n. */
inline word initial_word(monoid_kind kind, std::uint32_t slot_count) {
  word w;
  w.kind = kind;
  w.letters.resize(slot_count);
  for (std::uint32_t i = 0; i < slot_count; ++i)
    w.letters[i] = kind == monoid_kind::powerset ? i : 0;
  return w;
}

/**
 * Pure integrity check: replaying the recorded events from w0 must reproduce
 * every recorded word length (and, for slot-indexed words, the recorded fill
 * slots). Any structural failure decodes to false.
 */
inline bool trace_decodes(const run_trace& trace, const word& w0) {
  if (trace.steps.size() != trace.word_lengths.size()) return false;
  try {
    word_replayer r(w0);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      if (r.empty()) return false;
      if (w0.kind == monoid_kind::powerset && r.head() != trace.steps[i].slot) return false;
      replay_step s = trace.steps[i].event ? replay_step::violation(trace.steps[i].event->alpha)
                                           : replay_step::skip();
      r.step(s);
      if (r.size() != trace.word_lengths[i]) return false;
    }
  } catch (const error&) {
    return false;
  }
  return true;
}

}  // namespace lal
