#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "periodcalc/hodge_split.hpp"
#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

// All s in anchor + Z with lower < s <= upper.
struct CriticalSet {
  HalfInt anchor;
  HalfInt lower;
  HalfInt upper;
  std::vector<HalfInt> members;

  bool contains(HalfInt s) const;
  bool empty() const { return members.empty(); }
  std::string str() const;  // "{-1/2, 1/2}"
};

// Throws RankZero if either rank is 0.
bool has_critical_points(const InfinityType& a, const InfinityType& b);

// min over all places and pairs of |a_{v,i} + b_{v,j}|.
HalfInt critical_bound(const InfinityType& a, const InfinityType& b);

// Throws NoCriticalPoints if some a_{v,i} + b_{v,j} = 0.
CriticalSet critical_set(const InfinityType& a, const InfinityType& b);

// Integers m with -min|p - w/2| + w/2 < m <= min|p - w/2| + w/2 over all listed types.
// Throws MiddleHodgeWeight if some 2p = w.
std::vector<std::int64_t> motivic_critical_set(const std::vector<HodgeType>& types);

// Hodge types of M (x) M' at every embedding (both iota_v and its conjugate).
std::vector<HodgeType> tensor_hodge_types(const InfinityType& a, const InfinityType& b);

// Shift between automorphic and motivic normalisations: (n + n' - 2)/2.
HalfInt motivic_shift(int n, int n_prime);

bool check_shift_dictionary(const InfinityType& a, const InfinityType& b);

}  // namespace periodcalc
