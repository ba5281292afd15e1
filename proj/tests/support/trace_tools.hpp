#pragma once

// Shared helpers for re-walking engine traces: rebuild the state transition
// by transition exactly as the engine executed it, handing each step to
// caller callbacks. Used by the unit tests for the engine invariants and by
// the acceptance driver for detector/validator lockstep checks.

#include <utility>

#include "lal/assignment.hpp"
#include "lal/engine.hpp"
#include "lal/trace.hpp"

namespace testsupport {

/**
 * Replay `trace` against `ins`. pre(state, slot) fires before each fill,
 * post(state, step) after the fill and before the erasure the step's event
 * (if any) triggers. The state object is reused across calls.
 */
template <typename Pre, typename Post>
void walk_trace(const lal::problem_instance& ins, const lal::run_trace& trace, Pre&& pre,
                Post&& post) {
  lal::partial_assignment state(ins.slot_count());
  for (const auto& step : trace.steps) {
    pre(std::as_const(state), step.slot);
    state.fill(step.slot, step.value);
    post(std::as_const(state), step);
    if (step.event) {
      for (lal::slot_id s : ins.erase_set(*step.event, state)) state.erase(s);
    }
  }
}

}  // namespace testsupport
