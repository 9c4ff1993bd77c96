#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "periodcalc/hodge_split.hpp"
#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

// (r_v, s_v) per place.
struct SignatureTuple {
  std::vector<std::pair<int, int>> rs;

  // s_{v0} = 1 and s_v = 0 elsewhere.
  static SignatureTuple distinguished(int n, std::size_t d, std::size_t v0);
  // The superscripts I_v = s_v used by the global period P^(I).
  std::vector<int> superscripts() const;
};

// Smallest consecutive gap of the unmarked entries at one place.
HalfInt hc_min_gap(const HCParameter& A, std::size_t place);
// Every consecutive gap at every place is at least m.
bool hc_is_regular(const HCParameter& A, std::int64_t m);

// Delete entry q+1 at v0 and re-attach it as the marked slot.
HCParameter hc_of_q(const HCParameter& A, int q);

// Rank n-1 parameter: A_i - 1/2 (i <= n-1, i != q+1) plus marked A_{q+1} + 1/2 at v0;
// A_i - 1/2 (i <= n-1) elsewhere.
HCParameter hc_prime_of_q(const HCParameter& A, int q);

// p_i = -A_{v0,n+1-i} + (n-1)/2.
HodgeType hodge_numbers_H(const HCParameter& A);
// p'_i = A_{v0,i} + (n-3)/2 for i != q+1, p'_{q+1} = A_{v0,q+1} + (n-1)/2, weight n-2.
HodgeType hodge_numbers_Hprime(const HCParameter& A, int q);

// a_{v,i} = -A_{v,n+1-i}.
InfinityType pi_infinity_type(const HCParameter& A);
// b_{v,j} = A_{v,j} - 1/2, except b_{v0,q+1} = A_{v0,q+1} + 1/2; sorted decreasing.
InfinityType pi_prime_infinity_type(const HCParameter& A, int q);

// The parameter whose descent produces a representation with infinity type b.
HCParameter hc_from_infinity_type(const InfinityType& b, std::size_t v0);

// q' = n - q - 2.
int coh_degree_prime(int n, int q);

// q = 0 is the holomorphic case.
inline bool is_holomorphic_degree(int q) { return q == 0; }

}  // namespace periodcalc
