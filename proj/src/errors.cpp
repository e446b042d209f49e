#include "freefid/errors.hpp"

#include <cstdio>

namespace freefid {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::UnpairedRealEigenvalue: return "UnpairedRealEigenvalue";
    case ErrorCode::NegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::AngleAtBranchCut: return "AngleAtBranchCut";
    case ErrorCode::GNotDefined: return "GNotDefined";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::SingularCoupling: return "SingularCoupling";
    case ErrorCode::NegativeRelativeDeterminant: return "NegativeRelativeDeterminant";
    case ErrorCode::NonSpecialOrthogonal: return "NonSpecialOrthogonal";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::string describe(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

}  // namespace freefid
