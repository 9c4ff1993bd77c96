#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periodcalc/errors.hpp"
#include "periodcalc/report.hpp"
#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

// One problem instance as read from JSON; see docs/schemas.md.
struct Instance {
  struct Options {
    bool lvarch = true;
    bool allow_irregular = false;
  };

  CMShape shape;
  int n = 0;
  std::optional<int> n_prime;
  // Exactly one source per representation is kept.
  std::optional<InfinityType> pi;
  std::optional<InfinityType> pi_prime;
  std::optional<HighestWeight> pi_weight;
  std::optional<HighestWeight> pi_prime_weight;
  std::optional<HCParameter> A;
  std::optional<int> q;
  std::optional<HalfInt> s0;
  Options options;

  std::size_t d() const { return shape.d(); }

  // Throws Error(InvalidInstance) on schema violations and the domain errors
  // of the underlying types (ParityMismatch, TiedEntries, ...).
  static Instance from_json(const json& j);
  static Instance from_string(const std::string& text);
  static Instance load(const std::string& path);
  json to_json() const;

  // Infinity type of Pi: given directly, from weights, or from A.
  InfinityType pi_type() const;
  // Pi and Pi' for pair commands. With a parameter A the pair is built by
  // descent at degree `q_override` or the stored q.
  std::pair<InfinityType, InfinityType> pair_types(std::optional<int> q_override = std::nullopt) const;
};

// Exit-code contract of the command-line tool.
enum class ExitCode : int { Ok = 0, Internal = 1, InvalidInstance = 2, OpenResidual = 3 };
ExitCode exit_code_for(ErrorCode code);
ExitCode exit_code_for(Verdict v, bool lvarch);

}  // namespace periodcalc
