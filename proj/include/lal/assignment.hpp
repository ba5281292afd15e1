#pragma once

// Partial assignments of values to slots, and the erasure action of monoid
// elements on them: a powerset element clears the slots it names; the free
// generator to the t-th power truncates the t highest filled slots (for the
// sequence problems the filled region is always a prefix, so this is suffix
// truncation).

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "monoid.hpp"

namespace lal {

class partial_assignment {
 public:
  partial_assignment() = default;
  explicit partial_assignment(std::size_t n) : values_(n, 0), filled_(n, 0) {}

  std::size_t size() const { return values_.size(); }
  std::size_t filled_count() const { return filled_count_; }
  bool total() const { return filled_count_ == values_.size(); }

  bool is_filled(slot_id s) const { return filled_[s] != 0; }

  std::int32_t value_at(slot_id s) const {
    if (!is_filled(s)) fail(errc::bad_argument, "reading an unfilled slot");
    return values_[s];
  }

  void fill(slot_id s, std::int32_t v) {
    if (!filled_[s]) ++filled_count_;
    filled_[s] = 1;
    values_[s] = v;
  }

  void erase(slot_id s) {
    if (filled_[s]) --filled_count_;
    filled_[s] = 0;
    values_[s] = 0;
  }

  /** Values with unfilled slots reported as nullopt-like (-1 sentinel free). */
  const std::vector<std::int32_t>& raw_values() const { return values_; }
  const std::vector<std::uint8_t>& raw_filled() const { return filled_; }

  friend bool operator==(const partial_assignment& a, const partial_assignment& b) {
    if (a.filled_ != b.filled_) return false;
    for (std::size_t i = 0; i < a.values_.size(); ++i)
      if (a.filled_[i] && a.values_[i] != b.values_[i]) return false;
    return true;
  }

 private:
  std::vector<std::int32_t> values_;
  std::vector<std::uint8_t> filled_;
  std::size_t filled_count_ = 0;
};

/** Apply the erasure action of e to x. */
inline void apply_action(const monoid_element& e, partial_assignment& x) {
  if (e.kind == monoid_kind::powerset) {
    for (slot_id s : e.slots) {
      if (s < x.size()) x.erase(s);
    }
    return;
  }
  // free family: truncate the e.power highest filled slots
  std::uint64_t left = e.power;
  for (std::size_t i = x.size(); i-- > 0 && left > 0;) {
    if (x.is_filled(static_cast<slot_id>(i))) {
      x.erase(static_cast<slot_id>(i));
      --left;
    }
  }
}

inline partial_assignment acted(const monoid_element& e, partial_assignment x) {
  apply_action(e, x);
  return x;
}

}  // namespace lal
