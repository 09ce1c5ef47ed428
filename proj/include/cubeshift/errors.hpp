#pragma once

#include <stdexcept>
#include <string>

namespace cubeshift {

// Raised when an operation would need to materialise more state than its
// documented size limit allows (e.g. 2^n amplitude vectors for large n).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by recovery procedures that exhaust their sample budget without
// reaching a decision.
class InconclusiveError : public std::runtime_error {
 public:
  explicit InconclusiveError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cubeshift
