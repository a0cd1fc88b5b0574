#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wrr {

enum class ErrorKind {
  LoopEdge,
  NonpositiveWeight,
  DuplicateEdge,
  Disconnected,
  IndexOutOfRange,
  DimensionMismatch,
  SingularMatrix,
  NonIntegralWeights,
  NonIntegralDivisor,
  NegativeAwayFromQ,
  NonpositiveScale,
  NegativeDegree,
  InstanceTooLarge,
  Overflow,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures that indicate a bug in this library rather than bad input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::SingularMatrix || kind_ == ErrorKind::InvariantViolation;
  }

 private:
  ErrorKind kind_;
};

}  // namespace wrr
