#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepcl {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonIntegerCount,
  NegativeHStar,
  NotPalindromic,
  Unclassifiable,
  InterpolationGuardFailed,
  SizeExceeded,
  AmbiguousFacet,
  NotSymmetric,
  NotCL,
  DegreeMismatch,
  CrossDegreeMismatch,
  RelationFailed,
};

inline std::string_view error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonIntegerCount: return "NonIntegerCount";
    case ErrorCode::NegativeHStar: return "NegativeHStar";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::InterpolationGuardFailed: return "InterpolationGuardFailed";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::AmbiguousFacet: return "AmbiguousFacet";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCL: return "NotCL";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CrossDegreeMismatch: return "CrossDegreeMismatch";
    case ErrorCode::RelationFailed: return "RelationFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepcl
