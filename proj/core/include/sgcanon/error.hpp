#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sgcanon {

// Domain error: invalid input documents, contract violations, exceeded limits.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A single well-formedness violation, reported as data so callers can show
// all problems at once instead of failing on the first.
struct Violation {
  std::string message;

  bool operator==(const Violation&) const = default;
};

}  // namespace sgcanon
