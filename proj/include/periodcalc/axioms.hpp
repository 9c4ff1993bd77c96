#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "periodcalc/hodge_split.hpp"
#include "periodcalc/monomial.hpp"
#include "periodcalc/report.hpp"
#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

// lhs ~ rhs.
struct AxiomPair {
  std::string name;
  Monomial lhs;
  Monomial rhs;
  FieldTagSet tags;
  std::vector<std::string> notes;
  // Intermediate monomials of an internal rewrite chain, labelled by rule.
  std::vector<std::pair<std::string, Monomial>> chain;

  Monomial relation() const { return lhs / rhs; }
};

// A representation together with the tag its period symbols carry.
struct RepData {
  std::string tag;
  InfinityType a;
};

std::string field_of(const std::string& rep);      // "E(Pi3)"
std::string cm_field_of(const std::string& rep);   // "E_F(xicheck[Pi3])"
std::string xi_tag(const std::string& rep, const std::string& rep_prime);  // "Pi3/Pi2"

struct RsOptions {
  bool allow_irregular = false;
  std::int64_t regularity = 5;
  // Added to sp(i, Pi; Pi', iota_place) before exponents are formed.
  struct Corruption {
    std::size_t place = 0;
    int i = 0;
    int delta = 0;
  };
  std::optional<Corruption> corrupt;
};

// Both orderings of split indices of a tie-free pair at every iota_v in Sigma.
struct SplitTables {
  std::vector<SplitVector> pi;        // sp(i, Pi; Pi', iota_v)
  std::vector<SplitVector> pi_prime;  // sp(j, Pi'; Pi, iota_v)
};
SplitTables split_tables(const InfinityType& a, const InfinityType& b);

// L(s0, Pi x Pi') ~ (2 pi i)^{d n n' s0} prod_iota prod_i P^(i)(Pi, iota)^sp prod_j P^(j)(Pi', iota)^sp.
// Throws NonIntegralExponent, NotCritical, NotRegular (unless allowed).
AxiomPair axiom_rs_value(const RepData& pi, const RepData& pi_prime, HalfInt s0, const RsOptions& opt = {});

// L(1, Pi, As) ~ (2 pi i)^{d n (n+1)/2} prod_iota prod_{i=0}^{n} P^(i)(Pi, iota).
AxiomPair axiom_asai_value(const std::string& rep, int n, std::size_t d);

// 1 / (Q(pi(q)) Q(pi''(q))) ~ (2 pi i)^{d n (n+1)/2} L(1/2, Pi x Pi') / (L(1, Pi, As) L(1, Pi', As)),
// with constant-class factors 2^beta, Delta_H and I*_inf. Throws IndexOutOfRange unless 0 <= q <= n-2.
AxiomPair axiom_iinh(const std::string& rep, const std::string& rep_prime, int n, int q, std::size_t d);

// Q(pi''(q)) ~ Q(pi'(q)) Q(xi).
AxiomPair axiom_twist(const std::string& rep, const std::string& rep_prime, int n, int q);

// Registered identities xi = (xi_{pi'} xi_pi)^{-1}, keyed by the pair of representation tags.
class CharacterContext {
 public:
  void register_central_identity(const std::string& rep, const std::string& rep_prime) {
    identities_.emplace(rep, rep_prime);
  }
  bool has_central_identity(const std::string& rep, const std::string& rep_prime) const {
    return identities_.count({rep, rep_prime}) > 0;
  }

 private:
  std::set<std::pair<std::string, std::string>> identities_;
};

// Q(xi) ~ p(xicheck_Pi, Sigma) p(xicheck_Pi', Sigma), derived by a logged chain.
// Throws MissingCentralCharacterIdentity. With `combine` false the chain stops
// before the product rule is needed.
AxiomPair axiom_q_xi(const CharacterContext& ctx, const std::string& rep, const std::string& rep_prime,
                     std::size_t d, bool combine = true);

// Q(pi(0)) ~ P^(I0)(Pi).
AxiomPair axiom_holomorphic_base(const std::string& rep, int n, std::size_t d, std::size_t v0,
                                 int v0_superscript = 1);

// Q(pi(q)) ~ p(xicheck_Pi, Sigma)^{-1} P^(q+1)(Pi, iota_v0) / P^(q)(Pi, iota_v0).
AxiomPair auto_facto_statement(const std::string& rep, int n, std::size_t d, std::size_t v0, int q);

// P_i(Pi, iota) in terms of P^(0), Q(pi(i-1)) p(xicheck, Sigma), or P^(n) prod P_k^{-1}.
AxiomPair local_period_definition(const std::string& rep, int n, std::size_t d, std::size_t v0, int i,
                                  int q_shift = 0);

// Q^(i)(M, iota) = Q_0 ... Q_i; Q_0 itself is not expanded.
AxiomPair q_upper_definition(const std::string& motive, int n, int i, int place);
// Q_0(M, iota) = delta(M, iota) (2 pi i)^{n(n-1)/2}.
AxiomPair q0_definition(const std::string& motive, int n, int place);
// (2 pi i)^{n(n-1)/2} delta(M, iota) ~ p(xicheck^c, iota).
AxiomPair delta_relation(const std::string& motive, int n, int place, bool corrupt = false);
// Q_i(M, iota) ~ Q(pi(i-1)) prod_{iota'} ((2 pi i)^{n(n-1)/2} delta(M, iota'))^{-1}, 1 <= i <= n-1.
AxiomPair q_motivic_relation(const std::string& motive, int n, std::size_t d, int i, int place, bool corrupt = false);
// prod_{i=1}^{n} Q_i(M, iota) ~ ((2 pi i)^{n(n-1)/2} delta(M, iota))^{-2}.
AxiomPair motivic_product_relation(const std::string& motive, int n, int place, bool corrupt = false);

}  // namespace periodcalc
