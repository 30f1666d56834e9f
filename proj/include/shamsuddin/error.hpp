#pragma once

#include <stdexcept>
#include <string>

namespace shamsuddin {

/// Raised when an operation receives well-formed input it cannot act on
/// (division by the zero polynomial, a failed precondition, a budget overrun).
class OperationError : public std::runtime_error {
 public:
  explicit OperationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shamsuddin
