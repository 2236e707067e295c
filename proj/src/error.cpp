#include "shintani/error.hpp"

namespace shintani {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NonGenericDeformation: return "NonGenericDeformation";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotStabilizer: return "NotStabilizer";
    case ErrorKind::VHFailsForE1: return "VHFailsForE1";
    case ErrorKind::NotAMeasure: return "NotAMeasure";
    case ErrorKind::NonIntegralInput: return "NonIntegralInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace shintani
