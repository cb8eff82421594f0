#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quiddity {

enum class errc {
  usage,               // malformed input, mixed rings, bad arguments
  unsupported,         // operation not available for this ring
  invalid_cycle,       // input is not a quiddity / epsilon cycle
  invalid_labelling,   // labelling is not admissible or malformed
  rule_not_applicable, // local rewrite precondition fails
  singular,            // division by zero / non-invertible parameter
  not_representable,   // exact quotient leaves the ring
  not_applicable,      // structural precondition (length, parity) fails
  overflow,            // fixed-width fast path exceeded its range
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::usage: return "usage";
    case errc::unsupported: return "unsupported";
    case errc::invalid_cycle: return "invalid-cycle";
    case errc::invalid_labelling: return "invalid-labelling";
    case errc::rule_not_applicable: return "rule-not-applicable";
    case errc::singular: return "singular";
    case errc::not_representable: return "not-representable";
    case errc::not_applicable: return "not-applicable";
    case errc::overflow: return "overflow";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Raised when a proven guarantee fails; indicates a bug, never bad input.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quiddity
