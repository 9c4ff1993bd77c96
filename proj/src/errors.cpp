#include "periodcalc/errors.hpp"

namespace periodcalc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TiedEntries: return "TiedEntries";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::NoCriticalPoints: return "NoCriticalPoints";
    case ErrorCode::MiddleHodgeWeight: return "MiddleHodgeWeight";
    case ErrorCode::TieDetected: return "TieDetected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::IllegalPsiSet: return "IllegalPsiSet";
    case ErrorCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::MissingCentralCharacterIdentity: return "MissingCentralCharacterIdentity";
    case ErrorCode::OpenResidual: return "OpenResidual";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

}  // namespace periodcalc
