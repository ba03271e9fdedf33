#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gromov {

enum class ErrorCode {
  ParseError,
  NotSymmetric,
  NonPositiveDistance,
  TriangleViolation,
  NonGeneric,
  IndexOutOfRange,
  RepeatedIndex,
  SizeMismatch,
  NotClosed,
  TooSmall,
  SizeLimitExceeded,
  UnsupportedN,
  ReferenceMismatch,
  NonPositiveWeight,
  InvariantViolation,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Single exception type for the whole library. `detail` carries 1-based
// vertex indices when the error refers to specific points (e.g. the violated
// triangle triple, or the list of non-generic vertices).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<int> detail = {})
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::vector<int>& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::vector<int> detail_;
};

}  // namespace gromov
