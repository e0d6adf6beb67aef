#pragma once

#include <string>
#include <vector>

namespace qf {

struct Violation {
  std::string axiom;            // e.g. "idempotence", "left_invertibility"
  std::vector<int> witness;     // minimal witness tuple
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

}  // namespace qf
