#pragma once

#include <stdexcept>
#include <string>

namespace lal {

enum class errc {
  undefined_weight,
  empty_word,
  word_too_long,
  overflow,
  degenerate_delta,
  invalid_order,
  invalid_mu,
  zero_sum,
  too_large,
  invalid_distribution,
  incomplete_coloring,
  invalid_marginals,
  no_legal_color,
  parse_error,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::undefined_weight: return "undefined-weight";
    case errc::empty_word: return "empty-word";
    case errc::word_too_long: return "word-too-long";
    case errc::overflow: return "overflow";
    case errc::degenerate_delta: return "degenerate-delta";
    case errc::invalid_order: return "invalid-order";
    case errc::invalid_mu: return "invalid-mu";
    case errc::zero_sum: return "zero-sum";
    case errc::too_large: return "too-large";
    case errc::invalid_distribution: return "invalid-distribution";
    case errc::incomplete_coloring: return "incomplete-coloring";
    case errc::invalid_marginals: return "invalid-marginals";
    case errc::no_legal_color: return "no-legal-color";
    case errc::parse_error: return "parse-error";
    case errc::bad_argument: return "bad-argument";
  }
  return "unknown";
}

/** Library error with a machine-readable code. */
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace lal
