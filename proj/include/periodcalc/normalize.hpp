#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "periodcalc/monomial.hpp"

namespace periodcalc {

enum class Rule : int {
  CmSplitEmbeddings = 0,  // p(chi, Psi u Psi') = p(chi, Psi) p(chi, Psi')
  CmMultiplicative,       // p(chi chi', Psi) = p(chi, Psi) p(chi', Psi)
  CmConjugateSelfDual,    // p(chi-check, iota-bar) = p(chi-check, iota)^-1, chi conjugate self-dual
  CmPsi,                  // p(psi-check, iota-bar) = (2 pi i) p(psi, iota)^-1
  CmNorm,                 // p(|.|, iota) = (2 pi i)^-1
  LocalEnd,               // P^(0) = p(xicheck, iota-bar), P^(n) = p(xicheck, iota)
  Splitting,              // P^(I) = prod_iota P^(I_iota)(iota)
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
const std::vector<Rule>& all_rules();

struct NormalizeTrace {
  std::map<Rule, int> fired;
};

// Rewrites every symbol toward singleton-embedding CM periods on basis
// characters and local P symbols. Each rule maps one generator to a product
// of strictly smaller generators under the lexicographic measure
//   (symbol level: ArithGlobal > ArithLocal > CMPeriod, |Psi|,
//    number of character atoms + |exponent|, barred embedding),
// so rewriting terminates; since every rule is a substitution of one
// generator, the normal form does not depend on the order of application.
class Normalizer {
 public:
  Normalizer();
  Normalizer(std::vector<Rule> order, std::set<Rule> disabled);

  Monomial normalize(const Monomial& m, NormalizeTrace* trace = nullptr) const;
  // Picks a uniformly random applicable (symbol, rule) pair at every step.
  Monomial normalize_random(const Monomial& m, std::mt19937_64& rng, NormalizeTrace* trace = nullptr) const;

  bool enabled(Rule r) const { return !disabled_.count(r); }

  // One rewrite of a single symbol; nullopt if the rule does not apply.
  // Throws IllegalPsiSet for CM periods whose Psi meets its conjugate.
  static std::optional<Monomial> apply(Rule r, const PeriodSymbol& s);

 private:
  std::vector<Rule> order_;
  std::set<Rule> disabled_;
};

}  // namespace periodcalc
