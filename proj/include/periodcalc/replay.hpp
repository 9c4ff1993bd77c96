#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "periodcalc/report.hpp"
#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

struct ReplayOptions {
  bool lvarch = true;
  bool allow_irregular = false;
  // Name of a single axiom or rewrite rule to corrupt; see known_faults().
  std::optional<std::string> fault;
  bool use_memo = true;
};

struct FaultInfo {
  std::string name;     // axiom or rule name
  std::string theorem;  // "auto-facto", "factorization" or "deligne"
  std::string effect;
};
const std::vector<FaultInfo>& known_faults();
bool is_known_fault(const std::string& name);

// Representation tag used for rank-n data in replays: "Pi3".
std::string rep_tag(int n);

// Q(pi(q)) ~ p(xicheck_Pi, Sigma)^{-1} P^(q+1)(Pi, iota_v0) / P^(q)(Pi, iota_v0), replayed from
// the holomorphic base case and the induction on n. Throws NotRegular, IndexOutOfRange.
std::shared_ptr<const DerivationReport> replay_factorization(const HCParameter& A, int q,
                                                             const ReplayOptions& opts = {});

// P^(i) ~ P_0 ... P_i at iota_v0 for 0 <= i <= n and P_i ~ Q_i(M) for each i.
std::shared_ptr<const DerivationReport> verify_main_factorization(const HCParameter& A,
                                                                  const ReplayOptions& opts = {});

// RS value at s0 against the motivic Deligne-period expression; residual
// allowed in 2 pi i and constants. Throws NotCritical, TieDetected, NonIntegralExponent.
std::shared_ptr<const DerivationReport> verify_main_conjecture(const InfinityType& a, const InfinityType& b,
                                                               HalfInt s0, const ReplayOptions& opts = {});

// Number of cached sub-replays; the cache only grows.
std::size_t replay_memo_size();

}  // namespace periodcalc
