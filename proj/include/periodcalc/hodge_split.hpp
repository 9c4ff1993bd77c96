#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

struct HodgePair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  bool operator==(const HodgePair&) const = default;
};

// Hodge type at one embedding; p strictly decreasing, p + q = w.
struct HodgeType {
  std::int64_t w = 0;
  std::vector<HodgePair> pairs;

  void validate() const;
  std::vector<std::int64_t> ps() const;
  bool operator==(const HodgeType&) const = default;
};

struct SplitVector {
  int n = 0;
  std::vector<int> entries;  // sp(0..n)

  int sum() const;
  bool is_palindromic() const;
  std::string str() const;
  bool operator==(const SplitVector&) const = default;
};

// w = n - 1. At iota_v: p_i = -a_{v,n+1-i} + w/2; at iota_v-bar: p_i = a_{v,i} + w/2.
HodgeType hodge_type_from_infinity_type(const InfinityType& a, std::size_t place, bool barred);

// Throws TieDetected when some b_{v,j} = -a_{v,i}.
SplitVector automorphic_split_indices(const InfinityType& a, const InfinityType& b, std::size_t place,
                                      bool barred);

// Throws MiddleHodgeWeight when p_i + q_j = (w + w')/2 for some i, j.
SplitVector motivic_split_indices(const HodgeType& h, const HodgeType& h_prime);

// sp(i, a^c; b^c, iota) = sp(i, a; b, iota-bar) = sp(n - i, a; b, iota) for all i.
bool reflection_check(const InfinityType& a, const InfinityType& b, std::size_t place);

}  // namespace periodcalc
