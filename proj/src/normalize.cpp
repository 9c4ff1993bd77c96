#include "periodcalc/normalize.hpp"

#include "periodcalc/errors.hpp"

namespace periodcalc {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::CmSplitEmbeddings: return "cm-split-embeddings";
    case Rule::CmMultiplicative: return "cm-multiplicative";
    case Rule::CmConjugateSelfDual: return "cm-conjugate-self-dual";
    case Rule::CmPsi: return "cm-psi";
    case Rule::CmNorm: return "cm-norm";
    case Rule::LocalEnd: return "local-end";
    case Rule::Splitting: return "splitting";
  }
  return "?";
}

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = {Rule::CmSplitEmbeddings, Rule::CmMultiplicative, Rule::CmConjugateSelfDual,
                                          Rule::CmPsi,             Rule::CmNorm,           Rule::LocalEnd,
                                          Rule::Splitting};
  return rules;
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : all_rules())
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

namespace {

bool single_atom(const CharacterExpr& chi, CharBasis basis, bool conj) {
  if (!chi.is_basis()) return false;
  const auto& a = chi.atoms().begin()->first;
  return a.basis == basis && a.conj == conj;
}

}  // namespace

std::optional<Monomial> Normalizer::apply(Rule r, const PeriodSymbol& s) {
  switch (r) {
    case Rule::CmSplitEmbeddings: {
      if (s.kind != SymbolKind::CMPeriod || s.psi.size() == 1) return std::nullopt;
      if (meets_conjugate(s.psi)) throw Error(ErrorCode::IllegalPsiSet, s.key());
      Monomial out;
      for (const auto& e : s.psi) out.multiply(PeriodSymbol::cm(s.chi, e), 1);
      return out;
    }
    case Rule::CmMultiplicative: {
      if (s.kind != SymbolKind::CMPeriod || s.psi.size() != 1 || s.chi.is_basis()) return std::nullopt;
      Monomial out;
      for (const auto& [a, e] : s.chi.atoms())
        out.multiply(PeriodSymbol::cm(CharacterExpr::atom(a.basis, a.tag, a.conj), s.psi), e);
      return out;
    }
    case Rule::CmConjugateSelfDual: {
      if (s.kind != SymbolKind::CMPeriod || s.psi.size() != 1 || !s.psi.begin()->bar) return std::nullopt;
      if (!single_atom(s.chi, CharBasis::XiCheck, false)) return std::nullopt;
      return Monomial(PeriodSymbol::cm(s.chi, s.psi.begin()->conj()), -1);
    }
    case Rule::CmPsi: {
      // Written on the atom psi^c: p(psi-check, bar) = p(psi^c, bar)^-1.
      if (s.kind != SymbolKind::CMPeriod || s.psi.size() != 1 || !s.psi.begin()->bar) return std::nullopt;
      if (!single_atom(s.chi, CharBasis::Psi, true)) return std::nullopt;
      Monomial out(PeriodSymbol::two_pi_i(), -1);
      out.multiply(PeriodSymbol::cm(CharacterExpr::psi(), s.psi.begin()->conj()), 1);
      return out;
    }
    case Rule::CmNorm: {
      if (s.kind != SymbolKind::CMPeriod || s.psi.size() != 1 || s.psi.begin()->bar) return std::nullopt;
      if (!single_atom(s.chi, CharBasis::Norm, false)) return std::nullopt;
      return Monomial(PeriodSymbol::two_pi_i(), -1);
    }
    case Rule::LocalEnd: {
      if (s.kind != SymbolKind::ArithLocal) return std::nullopt;
      if (s.index != 0 && s.index != s.rank) return std::nullopt;
      const Embedding e{s.emb.place, s.index == 0};
      return Monomial(PeriodSymbol::cm(CharacterExpr::xi_check(s.rep), e), 1);
    }
    case Rule::Splitting: {
      if (s.kind != SymbolKind::ArithGlobal) return std::nullopt;
      Monomial out;
      for (std::size_t v = 0; v < s.signature.size(); ++v)
        out.multiply(PeriodSymbol::arith_local(s.rep, s.rank, s.signature[v], static_cast<int>(v)), 1);
      return out;
    }
  }
  return std::nullopt;
}

Normalizer::Normalizer() : order_(all_rules()) {}

Normalizer::Normalizer(std::vector<Rule> order, std::set<Rule> disabled)
    : order_(std::move(order)), disabled_(std::move(disabled)) {}

Monomial Normalizer::normalize(const Monomial& m, NormalizeTrace* trace) const {
  Monomial cur = m;
  for (;;) {
    bool changed = false;
    for (Rule r : order_) {
      if (disabled_.count(r)) continue;
      for (const auto& [s, e] : cur.terms()) {
        auto rhs = apply(r, s);
        if (!rhs) continue;
        const PeriodSymbol sym = s;
        const auto exp = e;
        cur.erase(sym);
        cur *= rhs->pow(exp);
        if (trace) ++trace->fired[r];
        changed = true;
        break;
      }
      if (changed) break;
    }
    if (!changed) return cur;
  }
}

Monomial Normalizer::normalize_random(const Monomial& m, std::mt19937_64& rng, NormalizeTrace* trace) const {
  Monomial cur = m;
  for (;;) {
    std::vector<std::pair<PeriodSymbol, Rule>> candidates;
    for (const auto& [s, e] : cur.terms())
      for (Rule r : order_)
        if (!disabled_.count(r) && apply(r, s)) candidates.emplace_back(s, r);
    if (candidates.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto [sym, r] = candidates[pick(rng)];
    const auto exp = cur.exponent(sym);
    cur.erase(sym);
    cur *= apply(r, sym)->pow(exp);
    if (trace) ++trace->fired[r];
  }
}

}  // namespace periodcalc
