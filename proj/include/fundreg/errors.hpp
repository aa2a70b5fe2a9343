#pragma once

#include <stdexcept>
#include <string>

namespace fundreg {

/// Raised when an operation would leave the finite truncation it was given.
/// Distinct from mathematical failure; checkers report it as inconclusive.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fundreg
