#pragma once

#include <stdexcept>
#include <string>

namespace qf {

struct MalformedTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m is not central in P; the coset construction is not well-defined.
struct CentralityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coset enumeration did not complete within the coset cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qf
