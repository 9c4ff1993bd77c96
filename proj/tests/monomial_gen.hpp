#pragma once

// Random period monomials for normalization properties.

#include <random>
#include <vector>

#include "periodcalc/monomial.hpp"

namespace testutil {

using namespace periodcalc;

inline CharacterExpr random_character(std::mt19937_64& rng) {
  static const std::vector<CharBasis> bases = {CharBasis::XiCheck, CharBasis::Xi, CharBasis::Psi, CharBasis::Eta,
                                               CharBasis::Norm};
  std::uniform_int_distribution<int> count(0, 3), basis(0, 4), coin(0, 1), exp(-2, 2);
  CharacterExpr chi;
  for (int k = count(rng); k > 0; --k) {
    const CharBasis b = bases[basis(rng)];
    const std::string tag = (b == CharBasis::XiCheck || b == CharBasis::Xi) ? (coin(rng) ? "Pi3" : "Pi2") : "";
    chi = chi * CharacterExpr::atom(b, tag, coin(rng) == 1, exp(rng));
  }
  return chi;
}

inline PeriodSymbol random_symbol(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> kind(0, 6), coin(0, 1);
  std::uniform_int_distribution<int> place(0, static_cast<int>(d) - 1);
  switch (kind(rng)) {
    case 0: return PeriodSymbol::two_pi_i();
    case 1:
    case 2: {
      EmbeddingSet psi;
      for (std::size_t v = 0; v < d; ++v) {
        const int c = std::uniform_int_distribution<int>(0, 2)(rng);
        if (c < 2) psi.insert(Embedding{static_cast<int>(v), c == 1});
      }
      return PeriodSymbol::cm(random_character(rng), psi);
    }
    case 3: return PeriodSymbol::arith_local("Pi3", 3, std::uniform_int_distribution<int>(0, 3)(rng), place(rng));
    case 4: {
      std::vector<int> sig;
      for (std::size_t v = 0; v < d; ++v) sig.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
      return PeriodSymbol::arith_global("Pi3", 3, sig);
    }
    case 5: return PeriodSymbol::q_auto("Pi3", 3, coin(rng));
    default: return PeriodSymbol::const_class("Delta_H");
  }
}

inline Monomial random_monomial(std::mt19937_64& rng) {
  const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  Monomial m;
  for (int k = std::uniform_int_distribution<int>(1, 6)(rng); k > 0; --k)
    m.multiply(random_symbol(rng, d), std::uniform_int_distribution<int>(-3, 3)(rng));
  return m;
}

}  // namespace testutil
