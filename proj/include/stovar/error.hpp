#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stovar {

enum class ErrorCode {
  InvalidArgument,
  EmptyMatrix,
  DimensionMismatch,
  NotSquare,
  NotTyped,
  NotType1,
  NonUniqueFixedVector,
  VsumNotOne,
  NegativeEntry,
  NonPositiveType,
  ZeroVariation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Precondition and input failures. Violations of the library's own
// invariants (a failed certificate or cross-check) are reported as
// std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stovar
