#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dhga {

enum class ErrorCode {
  SignatureMismatch,
  DimensionTooLarge,
  InvalidBlade,
  NotInvertible,
  IndexOutOfRange,
  DegreeCapExceeded,
  LengthMismatch,
  NotOrthogonal,
  NotSpecial,
  NotInPin,
  NonVectorImage,
  NullVectorPivot,
  NoPivot,
  IrrationalNorm,
  InvalidSpec,
  PropertyFailed,
  NotInQPrimeEven,
  NotInIdeal,
  NoSolution,
  RankDeficient,
  MixedParity,
  OddSpinElementInEvenDimension,
  NotCertified,
  IdentityFailed,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InvalidBlade: return "InvalidBlade";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::NotInPin: return "NotInPin";
    case ErrorCode::NonVectorImage: return "NonVectorImage";
    case ErrorCode::NullVectorPivot: return "NullVectorPivot";
    case ErrorCode::NoPivot: return "NoPivot";
    case ErrorCode::IrrationalNorm: return "IrrationalNorm";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::PropertyFailed: return "PropertyFailed";
    case ErrorCode::NotInQPrimeEven: return "NotInQPrimeEven";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::MixedParity: return "MixedParity";
    case ErrorCode::OddSpinElementInEvenDimension: return "OddSpinElementInEvenDimension";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dhga
