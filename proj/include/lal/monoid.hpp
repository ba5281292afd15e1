#pragma once

// Two commutative monoid families cover every instance in this library:
//   - powerset-of-slots, with union as the product (identity: the empty set);
//   - the free monoid on one generator, with exponent addition (identity: t=0).
// Elements act on partial assignments by erasure (see assignment.hpp) and carry
// a minimal-factorization weight underline_f.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lal {

using slot_id = std::uint32_t;

enum class monoid_kind { powerset, free_power };

/** Default cap on word lengths handled by replay (guards adversarial traces). */
inline constexpr std::size_t word_length_cap = std::size_t{1} << 20;

struct monoid_element {
  monoid_kind kind = monoid_kind::powerset;
  std::vector<slot_id> slots;  // sorted, unique; powerset only
  std::uint64_t power = 0;     // free_power only

  static monoid_element powerset(std::vector<slot_id> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    monoid_element e;
    e.kind = monoid_kind::powerset;
    e.slots = std::move(s);
    return e;
  }

  static monoid_element free_power(std::uint64_t t) {
    monoid_element e;
    e.kind = monoid_kind::free_power;
    e.power = t;
    return e;
  }

  static monoid_element identity(monoid_kind k) {
    return k == monoid_kind::powerset ? powerset({}) : free_power(0);
  }

  bool is_identity() const {
    return kind == monoid_kind::powerset ? slots.empty() : power == 0;
  }

  /** Length of the canonical minimal word representing this element. */
  std::size_t canonical_length() const {
    return kind == monoid_kind::powerset ? slots.size() : static_cast<std::size_t>(power);
  }

  friend bool operator==(const monoid_element& a, const monoid_element& b) {
    if (a.kind != b.kind) return false;
    return a.kind == monoid_kind::powerset ? a.slots == b.slots : a.power == b.power;
  }
};

/** Monoid product: set union / exponent sum. Kinds must match. */
inline monoid_element mul(const monoid_element& a, const monoid_element& b) {
  if (a.kind != b.kind) fail(errc::bad_argument, "cannot multiply across monoid families");
  if (a.kind == monoid_kind::free_power) return monoid_element::free_power(a.power + b.power);
  std::vector<slot_id> out;
  out.reserve(a.slots.size() + b.slots.size());
  std::set_union(a.slots.begin(), a.slots.end(), b.slots.begin(), b.slots.end(),
                 std::back_inserter(out));
  monoid_element e;
  e.kind = monoid_kind::powerset;
  e.slots = std::move(out);
  return e;
}

/** Right-multiplication by a single generator: alpha * beta. */
inline monoid_element mul_generator(const monoid_element& alpha, slot_id beta) {
  if (alpha.kind == monoid_kind::free_power) return monoid_element::free_power(alpha.power + 1);
  monoid_element g;
  g.kind = monoid_kind::powerset;
  g.slots = {beta};
  return mul(alpha, g);
}

// Words over the generating set. letters.front() is the head (next slot to
// fill). For the free family every letter is the unique generator, id 0.
struct word {
  monoid_kind kind = monoid_kind::powerset;
  std::vector<slot_id> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

/** Canonical minimal word for an element: sorted slot list / generator^t. */
inline word canonical_preimage(const monoid_element& e) {
  word w;
  w.kind = e.kind;
  if (e.kind == monoid_kind::powerset) {
    w.letters = e.slots;
  } else {
    w.letters.assign(static_cast<std::size_t>(e.power), 0);
  }
  return w;
}

/** Fold a word back into its element (tau). */
inline monoid_element tau(const word& w) {
  if (w.kind == monoid_kind::free_power) return monoid_element::free_power(w.letters.size());
  return monoid_element::powerset(w.letters);
}

// Per-generator weights. Uniform or tabulated by slot id; for the free family
// use the weight of generator 0.
class weight_function {
 public:
  static weight_function constant(double f) {
    weight_function w;
    w.uniform_ = f;
    return w;
  }
  static weight_function table(std::vector<double> per_slot) {
    weight_function w;
    w.table_ = std::move(per_slot);
    return w;
  }

  double at(slot_id v) const {
    if (uniform_) {
      if (*uniform_ <= 0.0) fail(errc::undefined_weight, "non-positive uniform weight");
      return *uniform_;
    }
    if (v >= table_.size()) fail(errc::undefined_weight, "no weight for generator " + std::to_string(v));
    double f = table_[v];
    if (f <= 0.0) fail(errc::undefined_weight, "non-positive weight for generator " + std::to_string(v));
    return f;
  }

  bool is_uniform() const { return uniform_.has_value(); }
  double uniform_value() const { return at(0); }
  const std::vector<double>& table_values() const { return table_; }

 private:
  std::optional<double> uniform_;
  std::vector<double> table_;
};

/**
 * Minimal-factorization weight of an element: product of generator weights
 * over the canonical word. Powerset S -> prod f(v); free t -> f^t; identity -> 1.
 */
inline double underline_f(const monoid_element& e, const weight_function& f) {
  if (e.kind == monoid_kind::free_power) {
    double base = f.at(0);
    double out = 1.0;
    for (std::uint64_t i = 0; i < e.power; ++i) out *= base;
    return out;
  }
  double out = 1.0;
  for (slot_id v : e.slots) out *= f.at(v);
  return out;
}

// One replay step: either the head slot was filled successfully (skip) or a
// violation with repair element alpha was hit, pushing back tau^{-1}(alpha*beta).
struct replay_step {
  std::optional<monoid_element> event;  // nullopt = skip
  static replay_step skip() { return {}; }
  static replay_step violation(monoid_element alpha) { return {std::move(alpha)}; }
};

/**
 * Incremental word replayer. Mirrors the engine's word evolution exactly:
 * pop the head beta; on skip discard it, on violation prepend the canonical
 * word of alpha*beta.
 */
class word_replayer {
 public:
  explicit word_replayer(const word& w0, std::size_t max_len = word_length_cap)
      : kind_(w0.kind), q_(w0.letters.begin(), w0.letters.end()), cap_(max_len) {
    if (q_.size() > cap_) fail(errc::word_too_long, "initial word exceeds cap");
  }

  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }
  slot_id head() const {
    if (q_.empty()) fail(errc::empty_word, "replay on empty word");
    return q_.front();
  }

  void step(const replay_step& s) {
    if (q_.empty()) fail(errc::empty_word, "replay on empty word");
    slot_id beta = q_.front();
    q_.pop_front();
    if (!s.event) return;
    if (s.event->kind != kind_) fail(errc::bad_argument, "event from the wrong monoid family");
    word u = canonical_preimage(mul_generator(*s.event, beta));
    if (q_.size() + u.letters.size() > cap_) fail(errc::word_too_long, "replayed word exceeds cap");
    q_.insert(q_.begin(), u.letters.begin(), u.letters.end());
  }

  word current() const {
    word w;
    w.kind = kind_;
    w.letters.assign(q_.begin(), q_.end());
    return w;
  }

 private:
  monoid_kind kind_;
  std::deque<slot_id> q_;
  std::size_t cap_;
};

/**
 * Replay a full word evolution from w0. Deterministic given the canonical
 * factorization; throws empty_word if a step pops an exhausted word and
 * word_too_long past the cap.
 */
inline word replay_word_evolution(const word& w0, const std::vector<replay_step>& steps,
                                  std::size_t max_len = word_length_cap) {
  word_replayer r(w0, max_len);
  for (const auto& s : steps) r.step(s);
  return r.current();
}

}  // namespace lal
