#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodcalc {

enum class ErrorCode {
  TiedEntries,
  ParityMismatch,
  RankZero,
  NoCriticalPoints,
  MiddleHodgeWeight,
  TieDetected,
  IndexOutOfRange,
  NotRegular,
  IllegalPsiSet,
  NonIntegralExponent,
  NotCritical,
  MissingCentralCharacterIdentity,
  OpenResidual,
  InvalidInstance,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace periodcalc
