#include "periodcalc/axioms.hpp"

#include "periodcalc/critical_points.hpp"
#include "periodcalc/errors.hpp"

namespace periodcalc {

std::string field_of(const std::string& rep) { return "E(" + rep + ")"; }
std::string cm_field_of(const std::string& rep) { return "E_F(xicheck[" + rep + "])"; }
std::string xi_tag(const std::string& rep, const std::string& rep_prime) { return rep + "/" + rep_prime; }

namespace {

std::string q_field(const std::string& rep, int q) { return "E(pi[" + rep + ";q=" + std::to_string(q) + "])"; }

Monomial cm_sigma(const std::string& rep, std::size_t d, std::int64_t e = 1) {
  return Monomial(PeriodSymbol::cm(CharacterExpr::xi_check(rep), sigma(d)), e);
}

std::int64_t tri(std::int64_t n) { return n * (n - 1) / 2; }

// (2 pi i)^{n(n-1)/2} delta(M, iota).
Monomial scaled_delta(const std::string& motive, int n, int place) {
  Monomial m(PeriodSymbol::delta(motive, n, place));
  m.multiply(PeriodSymbol::two_pi_i(), tri(n));
  return m;
}

}  // namespace

SplitTables split_tables(const InfinityType& a, const InfinityType& b) {
  SplitTables t;
  for (std::size_t v = 0; v < a.places(); ++v) {
    t.pi.push_back(automorphic_split_indices(a, b, v, false));
    t.pi_prime.push_back(automorphic_split_indices(b, a, v, false));
  }
  return t;
}

AxiomPair axiom_rs_value(const RepData& pi, const RepData& pi_prime, HalfInt s0, const RsOptions& opt) {
  const int n = pi.a.n, np = pi_prime.a.n;
  const std::size_t d = pi.a.places();
  const std::int64_t twice = static_cast<std::int64_t>(n) * np * s0.doubled();
  if (twice % 2 != 0)
    throw Error(ErrorCode::NonIntegralExponent, "n n' s0 = " + HalfInt::from_doubled(twice).str() + " is not integral");
  const CriticalSet cs = critical_set(pi.a, pi_prime.a);
  if (!cs.contains(s0)) throw Error(ErrorCode::NotCritical, "s0 = " + s0.str() + " not in " + cs.str());

  AxiomPair ax;
  ax.name = "rs-value";
  const HalfInt reg = HalfInt::from_int(opt.regularity);
  const bool irregular = (n > 1 && pi.a.min_gap() < reg) || (np > 1 && pi_prime.a.min_gap() < reg);
  if (irregular) {
    if (!opt.allow_irregular) throw Error(ErrorCode::NotRegular, "rs-value needs gaps >= " + reg.str());
    ax.notes.push_back("regularity override: gaps below " + reg.str() + " accepted");
  }

  const SplitTables t = split_tables(pi.a, pi_prime.a);
  ax.lhs = Monomial(PeriodSymbol::l_rs(pi.tag, pi_prime.tag, s0.doubled()));
  ax.rhs = Monomial(PeriodSymbol::two_pi_i(), static_cast<std::int64_t>(d) * (twice / 2));
  for (std::size_t v = 0; v < d; ++v) {
    SplitVector sp = t.pi[v];
    if (opt.corrupt && opt.corrupt->place == v) sp.entries.at(opt.corrupt->i) += opt.corrupt->delta;
    for (int i = 0; i <= n; ++i)
      ax.rhs.multiply(PeriodSymbol::arith_local(pi.tag, n, i, static_cast<int>(v)), sp.entries[i]);
    for (int j = 0; j <= np; ++j)
      ax.rhs.multiply(PeriodSymbol::arith_local(pi_prime.tag, np, j, static_cast<int>(v)), t.pi_prime[v].entries[j]);
  }
  ax.tags = FieldTagSet{field_of(pi.tag), field_of(pi_prime.tag)};
  return ax;
}

AxiomPair axiom_asai_value(const std::string& rep, int n, std::size_t d) {
  AxiomPair ax;
  ax.name = "asai-value";
  ax.lhs = Monomial(PeriodSymbol::l_asai(rep, n));
  ax.rhs = Monomial(PeriodSymbol::two_pi_i(), static_cast<std::int64_t>(d) * n * (n + 1) / 2);
  for (std::size_t v = 0; v < d; ++v)
    for (int i = 0; i <= n; ++i) ax.rhs.multiply(PeriodSymbol::arith_local(rep, n, i, static_cast<int>(v)), 1);
  ax.tags = FieldTagSet{field_of(rep)};
  return ax;
}

AxiomPair axiom_iinh(const std::string& rep, const std::string& rep_prime, int n, int q, std::size_t d) {
  if (q < 0 || q > n - 2) throw Error(ErrorCode::IndexOutOfRange, "q outside 0..n-2");
  const int qp = n - q - 2;
  AxiomPair ax;
  ax.name = "ggp-iinh";
  ax.lhs = Monomial(PeriodSymbol::q_auto(rep, n, q), -1);
  ax.lhs.multiply(PeriodSymbol::q_twisted(rep_prime, n - 1, qp, xi_tag(rep, rep_prime)), -1);
  ax.rhs = Monomial(PeriodSymbol::two_pi_i(), static_cast<std::int64_t>(d) * n * (n + 1) / 2);
  ax.rhs.multiply(PeriodSymbol::l_rs(rep, rep_prime, 1), 1);
  ax.rhs.multiply(PeriodSymbol::l_asai(rep, n), -1);
  ax.rhs.multiply(PeriodSymbol::l_asai(rep_prime, n - 1), -1);
  ax.rhs.multiply(PeriodSymbol::const_class("2^beta"), 1);
  ax.rhs.multiply(PeriodSymbol::const_class("Delta_H"), 1);
  ax.rhs.multiply(PeriodSymbol::const_class("I*_inf", true), 1);
  ax.tags = FieldTagSet{q_field(rep, q), q_field(rep_prime, qp)};
  ax.notes.push_back("licenses division by " + PeriodSymbol::l_rs(rep, rep_prime, 1).key() +
                     ": nonvanishing follows from the nonzero global period");
  return ax;
}

AxiomPair axiom_twist(const std::string& rep, const std::string& rep_prime, int n, int q) {
  const int qp = n - q - 2;
  const std::string xt = xi_tag(rep, rep_prime);
  AxiomPair ax;
  ax.name = "twist-expansion";
  ax.lhs = Monomial(PeriodSymbol::q_twisted(rep_prime, n - 1, qp, xt));
  ax.rhs = PeriodSymbol::q_auto(rep_prime, n - 1, qp) * PeriodSymbol::q_character(xt);
  ax.tags = FieldTagSet{q_field(rep_prime, qp)};
  return ax;
}

AxiomPair axiom_q_xi(const CharacterContext& ctx, const std::string& rep, const std::string& rep_prime,
                     std::size_t d, bool combine) {
  const std::string xt = xi_tag(rep, rep_prime);
  const CharacterExpr xi = CharacterExpr::xi(xt);
  AxiomPair ax;
  ax.name = "q-xi";
  ax.lhs = Monomial(PeriodSymbol::q_character(xt));
  ax.tags = FieldTagSet{"E_F(xi[" + xt + "])", cm_field_of(rep), cm_field_of(rep_prime)};

  Monomial cur = Monomial(PeriodSymbol::cm(xi, sigma(d))) / Monomial(PeriodSymbol::cm(xi, sigma_bar(d)));
  ax.chain.emplace_back("cm-functoriality", cur);
  cur = Monomial(PeriodSymbol::cm(xi, sigma(d))) / Monomial(PeriodSymbol::cm(xi.conjugate(), sigma(d)));
  ax.chain.emplace_back("cm-conjugate-embedding", cur);
  if (!combine) {
    ax.rhs = cur;
    ax.notes.push_back("chain stopped: product rule unavailable");
    return ax;
  }
  const CharacterExpr ratio = xi * xi.conjugate().inverse();
  cur = Monomial(PeriodSymbol::cm(ratio, sigma(d)));
  ax.chain.emplace_back("cm-multiplicative", cur);
  if (!ctx.has_central_identity(rep, rep_prime))
    throw Error(ErrorCode::MissingCentralCharacterIdentity,
                "no identity xi = (xi_pi' xi_pi)^-1 registered for " + rep + ", " + rep_prime);
  cur = Monomial(PeriodSymbol::cm(CharacterExpr::xi_check(rep) * CharacterExpr::xi_check(rep_prime), sigma(d)));
  ax.chain.emplace_back("central-character", cur);
  cur = cm_sigma(rep, d) * cm_sigma(rep_prime, d);
  ax.chain.emplace_back("cm-multiplicative", cur);
  ax.rhs = cur;
  return ax;
}

AxiomPair axiom_holomorphic_base(const std::string& rep, int n, std::size_t d, std::size_t v0, int v0_superscript) {
  std::vector<int> sig(d, 0);
  sig.at(v0) = v0_superscript;
  AxiomPair ax;
  ax.name = "holomorphic-base";
  ax.lhs = Monomial(PeriodSymbol::q_auto(rep, n, 0));
  ax.rhs = Monomial(PeriodSymbol::arith_global(rep, n, sig));
  ax.tags = FieldTagSet{field_of(rep), q_field(rep, 0)};
  return ax;
}

AxiomPair auto_facto_statement(const std::string& rep, int n, std::size_t d, std::size_t v0, int q) {
  AxiomPair ax;
  ax.name = "auto-facto";
  ax.lhs = Monomial(PeriodSymbol::q_auto(rep, n, q));
  ax.rhs = cm_sigma(rep, d, -1);
  ax.rhs.multiply(PeriodSymbol::arith_local(rep, n, q + 1, static_cast<int>(v0)), 1);
  ax.rhs.multiply(PeriodSymbol::arith_local(rep, n, q, static_cast<int>(v0)), -1);
  ax.tags = FieldTagSet{field_of(rep), q_field(rep, q), cm_field_of(rep)};
  return ax;
}

AxiomPair local_period_definition(const std::string& rep, int n, std::size_t d, std::size_t v0, int i, int q_shift) {
  const int place = static_cast<int>(v0);
  AxiomPair ax;
  ax.name = "local-period-def";
  ax.lhs = Monomial(PeriodSymbol::local_factor(rep, n, i, place));
  if (i == 0) {
    ax.rhs = Monomial(PeriodSymbol::arith_local(rep, n, 0, place));
  } else if (i < n) {
    ax.rhs = Monomial(PeriodSymbol::q_auto(rep, n, i - 1 + q_shift)) * cm_sigma(rep, d);
  } else {
    ax.rhs = Monomial(PeriodSymbol::arith_local(rep, n, n, place));
    for (int k = 0; k < n; ++k) ax.rhs.multiply(PeriodSymbol::local_factor(rep, n, k, place), -1);
  }
  ax.tags = FieldTagSet{field_of(rep)};
  return ax;
}

AxiomPair q_upper_definition(const std::string& motive, int n, int i, int place) {
  AxiomPair ax;
  ax.name = "q-period-def";
  ax.lhs = Monomial(PeriodSymbol::q_upper(motive, n, i, place));
  for (int k = 0; k <= i; ++k) ax.rhs.multiply(PeriodSymbol::q_motivic(motive, n, k, place), 1);
  ax.tags = FieldTagSet{field_of(motive)};
  return ax;
}

AxiomPair q0_definition(const std::string& motive, int n, int place) {
  AxiomPair ax;
  ax.name = "q-period-def";
  ax.lhs = Monomial(PeriodSymbol::q_motivic(motive, n, 0, place));
  ax.rhs = scaled_delta(motive, n, place);
  ax.tags = FieldTagSet{field_of(motive)};
  return ax;
}

AxiomPair delta_relation(const std::string& motive, int n, int place, bool corrupt) {
  AxiomPair ax;
  ax.name = "tate-delta";
  ax.lhs = scaled_delta(motive, n, place);
  const CharacterExpr chi = corrupt ? CharacterExpr::xi_check(motive) : CharacterExpr::xi_check(motive).conjugate();
  ax.rhs = Monomial(PeriodSymbol::cm(chi, Embedding{place, false}));
  ax.tags = FieldTagSet{field_of(motive)};
  return ax;
}

AxiomPair q_motivic_relation(const std::string& motive, int n, std::size_t d, int i, int place, bool corrupt) {
  AxiomPair ax;
  ax.name = "tate-q";
  ax.lhs = Monomial(PeriodSymbol::q_motivic(motive, n, i, place));
  ax.rhs = Monomial(PeriodSymbol::q_auto(motive, n, i - 1));
  for (std::size_t v = 0; v < d; ++v) ax.rhs *= scaled_delta(motive, n, static_cast<int>(v)).pow(corrupt ? 1 : -1);
  ax.tags = FieldTagSet{field_of(motive), q_field(motive, i - 1)};
  return ax;
}

AxiomPair motivic_product_relation(const std::string& motive, int n, int place, bool corrupt) {
  AxiomPair ax;
  ax.name = "motivic-product";
  for (int k = 1; k <= n; ++k) ax.lhs.multiply(PeriodSymbol::q_motivic(motive, n, k, place), 1);
  ax.rhs = scaled_delta(motive, n, place).pow(corrupt ? -1 : -2);
  ax.tags = FieldTagSet{field_of(motive)};
  return ax;
}

}  // namespace periodcalc
