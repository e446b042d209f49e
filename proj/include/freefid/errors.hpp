#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freefid {

enum class ErrorCode {
  ShapeMismatch,
  NotSymmetric,
  NotAntisymmetric,
  OddSize,
  NotOrthogonal,
  UnpairedRealEigenvalue,
  NegativeDeterminant,
  AngleAtBranchCut,
  GNotDefined,
  IllConditioned,
  SingularCoupling,
  NegativeRelativeDeterminant,
  NonSpecialOrthogonal,
  LengthMismatch,
  TooLarge,
  ConfigError,
  IOError,
};

std::string_view to_string(ErrorCode code) noexcept;

// %g rendering of a number for error messages.
std::string describe(double value);

// Every failure raised by the library carries one of the codes above so
// callers (and the Python bindings) can branch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace freefid
