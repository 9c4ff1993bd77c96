#include "periodcalc/replay.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "periodcalc/axioms.hpp"
#include "periodcalc/critical_points.hpp"
#include "periodcalc/descent.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/hodge_split.hpp"
#include "periodcalc/normalize.hpp"

namespace periodcalc {

const std::vector<FaultInfo>& known_faults() {
  static const std::vector<FaultInfo> faults = {
      {"rs-value", "auto-facto", "sp(q, Pi; Pi', iota_v0) raised by one (sp(1) in the Deligne check)"},
      {"asai-value", "auto-facto", "P^(1)(Pi, iota_v0) dropped from the Asai value"},
      {"ggp-iinh", "auto-facto", "2 pi i exponent raised by one"},
      {"twist-expansion", "auto-facto", "Q(xi) dropped from the twist expansion"},
      {"q-xi", "auto-facto", "p(xicheck_Pi', Sigma) dropped from Q(xi)"},
      {"central-character", "auto-facto", "central-character identity not registered"},
      {"induction-hypothesis", "auto-facto", "P^(q') and P^(q'+1) swapped in the rank n-1 statement"},
      {"holomorphic-base", "auto-facto", "signature superscript at v0 set to 2"},
      {"local-end", "auto-facto", "rule disabled"},
      {"splitting", "auto-facto", "rule disabled"},
      {"cm-split-embeddings", "auto-facto", "rule disabled"},
      {"cm-multiplicative", "auto-facto", "rule disabled"},
      {"cm-conjugate-self-dual", "auto-facto", "rule disabled"},
      {"local-period-def", "factorization", "P_i defined from Q(pi(i)) instead of Q(pi(i-1))"},
      {"tate-delta", "factorization", "delta relation targets p(xicheck, iota)"},
      {"motivic-product", "factorization", "product of Q_i taken to the power -1"},
      {"tate-q", "factorization", "q(M) inverted"},
      {"tate-lemma", "factorization", "P_l ~ Q_l used inverted in the product"},
      {"auto-facto", "factorization", "P^(q) and P^(q+1) swapped in the auto-facto lemma"},
      {"q-period-def", "factorization", "Q_0 defined from delta squared; Q^(j) missing its last factor"},
      {"factorization", "deligne", "P^(k) expanded as P_0 ... P_(k-1)"},
      {"split-index", "deligne", "one unit of sp(., M; M') at the first place moved to a neighbour"},
      {"w-prime", "deligne", "weight of M' shifted"},
      {"tate-relation", "deligne", "Q_0 replaced by 1 in the Tate relation"},
  };
  return faults;
}

bool is_known_fault(const std::string& name) {
  const auto& f = known_faults();
  return std::any_of(f.begin(), f.end(), [&](const FaultInfo& x) { return x.name == name; });
}

std::string rep_tag(int n) { return "Pi" + std::to_string(n); }

namespace {

bool faulted(const ReplayOptions& o, const std::string& name) { return o.fault && *o.fault == name; }

Normalizer make_normalizer(const ReplayOptions& o) {
  std::set<Rule> disabled;
  if (o.fault)
    if (auto r = rule_from_name(*o.fault)) disabled.insert(*r);
  return Normalizer(all_rules(), disabled);
}

Verdict worst(Verdict a, Verdict b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

// Folds the verdicts and axiom sets of subreports into the parent.
void absorb_subreports(DerivationReport& r) {
  for (const auto& s : r.subreports) {
    r.verdict = worst(r.verdict, s->verdict);
    r.axioms_used.insert(s->axioms_used.begin(), s->axioms_used.end());
  }
}

std::string doubled_rows(const std::vector<std::vector<HalfInt>>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t v = 0; v < rows.size(); ++v) {
    os << (v ? ";" : "");
    for (std::size_t i = 0; i < rows[v].size(); ++i) os << (i ? "," : "") << rows[v][i].str();
  }
  os << "]";
  return os.str();
}

std::string memo_key(const HCParameter& A, int q, const ReplayOptions& o) {
  std::ostringstream os;
  os << A.n << "|" << A.v0 << "|";
  for (std::size_t v = 0; v < A.places(); ++v) {
    for (const auto& x : A.multiset_at(v)) os << x.doubled() << ",";
    os << ";";
  }
  os << "|" << q << "|" << o.lvarch << o.allow_irregular << "|" << o.fault.value_or("");
  return os.str();
}

std::mutex memo_mutex;
std::map<std::string, std::shared_ptr<const DerivationReport>>& memo() {
  static std::map<std::string, std::shared_ptr<const DerivationReport>> m;
  return m;
}

std::shared_ptr<const DerivationReport> replay_uncached(const HCParameter& A, int q, const ReplayOptions& opts);

std::shared_ptr<const DerivationReport> replay_cached(const HCParameter& A, int q, const ReplayOptions& opts) {
  if (!opts.use_memo) return replay_uncached(A, q, opts);
  const std::string key = memo_key(A, q, opts);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  auto r = replay_uncached(A, q, opts);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo().emplace(key, r).first->second;
}

void validate_parameter(const HCParameter& A, const ReplayOptions& opts, std::vector<std::string>& notes) {
  if (A.marked) throw Error(ErrorCode::InvalidInstance, "parameter must be unmarked");
  A.validate();
  if (A.n < 2) throw Error(ErrorCode::IndexOutOfRange, "rank must be at least 2");
  const std::int64_t m = A.n + 4;
  if (!hc_is_regular(A, m)) {
    if (!opts.allow_irregular)
      throw Error(ErrorCode::NotRegular, "parameter gaps must be at least " + std::to_string(m));
    notes.push_back("regularity override: parameter gaps below " + std::to_string(m) + " accepted");
  }
}

std::shared_ptr<const DerivationReport> replay_uncached(const HCParameter& A, int q, const ReplayOptions& opts) {
  std::vector<std::string> pre_notes;
  validate_parameter(A, opts, pre_notes);
  const int n = A.n;
  if (q < 0 || q > n - 2)
    throw Error(ErrorCode::IndexOutOfRange,
                "q = " + std::to_string(q) + " outside 0.." + std::to_string(n - 2) + " for n = " + std::to_string(n));
  const std::size_t d = A.places();
  const std::size_t v0 = A.v0;
  const int place0 = static_cast<int>(v0);
  const std::string R = rep_tag(n), Rp = rep_tag(n - 1);

  const Normalizer norm = make_normalizer(opts);
  const AllowedClasses allowed{false, opts.lvarch};
  const AxiomPair statement = auto_facto_statement(R, n, d, v0, q);
  Derivation D("auto-facto", statement.relation(), norm, allowed);
  D.param("n", std::to_string(n));
  D.param("d", std::to_string(d));
  D.param("q", std::to_string(q));
  D.param("v0", std::to_string(v0));
  D.param("A", doubled_rows(A.entries));
  for (const auto& s : pre_notes) D.note(s);
  if (opts.fault) D.note("fault injected: " + *opts.fault);

  const InfinityType a = pi_infinity_type(A);
  std::shared_ptr<const DerivationReport> sub;

  if (q == 0) {
    const AxiomPair base = axiom_holomorphic_base(R, n, d, v0, faulted(opts, "holomorphic-base") ? 2 : 1);
    D.apply(base.name, base.relation(), -1, base.tags, "q = 0 is the holomorphic case");
    D.normalize("expand the global period and cancel end periods");
  } else {
    const InfinityType b = pi_prime_infinity_type(A, q);
    const int qp = coh_degree_prime(n, q);
    D.param("b", doubled_rows(b.a));
    D.param("q'", std::to_string(qp));

    sub = replay_cached(hc_from_infinity_type(b, v0), qp, opts);

    AxiomPair iinh = axiom_iinh(R, Rp, n, q, d);
    if (faulted(opts, "ggp-iinh")) iinh.rhs.multiply(PeriodSymbol::two_pi_i(), 1);
    for (const auto& s : iinh.notes) D.note(s);
    D.apply(iinh.name, iinh.relation(), 1, iinh.tags, "GGP period identity for pi(q) and pi''(q)");

    AxiomPair tw = axiom_twist(R, Rp, n, q);
    if (faulted(opts, "twist-expansion")) tw.rhs.erase(PeriodSymbol::q_character(xi_tag(R, Rp)));
    D.apply(tw.name, tw.relation(), 1, tw.tags, "pi''(q) = pi'(q) twisted by xi");

    CharacterContext ctx;
    if (!faulted(opts, "central-character")) ctx.register_central_identity(R, Rp);
    AxiomPair qx;
    try {
      qx = axiom_q_xi(ctx, R, Rp, d, norm.enabled(Rule::CmMultiplicative));
      if (qx.notes.empty()) D.use("central-character");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingCentralCharacterIdentity) throw;
      D.note(std::string("q-xi chain stopped: ") + e.what());
      qx = axiom_q_xi(ctx, R, Rp, d, false);
    }
    if (faulted(opts, "q-xi")) qx.rhs.erase(PeriodSymbol::cm(CharacterExpr::xi_check(Rp), sigma(d)));
    for (const auto& [rule, m] : qx.chain) D.note("q-xi chain, " + rule + ": " + m.str());
    for (const auto& s : qx.notes) D.note(s);
    D.apply(qx.name, qx.relation(), 1, qx.tags, "period of the U(1) character");

    AxiomPair ih = auto_facto_statement(Rp, n - 1, d, v0, qp);
    ih.name = "induction-hypothesis";
    if (faulted(opts, "induction-hypothesis")) {
      ih.rhs.multiply(PeriodSymbol::arith_local(Rp, n - 1, qp + 1, place0), -2);
      ih.rhs.multiply(PeriodSymbol::arith_local(Rp, n - 1, qp, place0), 2);
    }
    D.apply(ih.name, ih.relation(), 1, ih.tags,
            "rank " + std::to_string(n - 1) + ", q' = " + std::to_string(qp) + ": " + verdict_name(sub->verdict));
    D.subreport(sub);

    RsOptions ro;
    ro.allow_irregular = opts.allow_irregular;
    if (faulted(opts, "rs-value")) ro.corrupt = RsOptions::Corruption{v0, q, 1};
    const AxiomPair rs = axiom_rs_value(RepData{R, a}, RepData{Rp, b}, half(1), ro);
    for (const auto& s : rs.notes) D.note(s);
    D.apply(rs.name, rs.relation(), 1, rs.tags, "critical value at s0 = 1/2");

    AxiomPair as_n = axiom_asai_value(R, n, d);
    if (faulted(opts, "asai-value")) as_n.rhs.erase(PeriodSymbol::arith_local(R, n, 1, place0));
    const AxiomPair as_p = axiom_asai_value(Rp, n - 1, d);
    D.apply(as_n.name, as_n.relation(), -1, as_n.tags, "Asai value for Pi");
    D.apply(as_p.name, as_p.relation(), -1, as_p.tags, "Asai value for Pi'");

    // The RS value over the two Asai values collapses to the ratios at v0.
    Monomial expect(PeriodSymbol::two_pi_i(), -static_cast<std::int64_t>(d) * n * (n + 1) / 2);
    expect.multiply(PeriodSymbol::arith_local(R, n, q, place0), 1);
    expect.multiply(PeriodSymbol::arith_local(R, n, q + 1, place0), -1);
    expect.multiply(PeriodSymbol::arith_local(Rp, n - 1, qp, place0), 1);
    expect.multiply(PeriodSymbol::arith_local(Rp, n - 1, qp + 1, place0), -1);
    const bool ratio_ok = norm.normalize(rs.rhs / (as_n.rhs * as_p.rhs)) == norm.normalize(expect);
    D.note(std::string("RS over Asai ratio check: ") + (ratio_ok ? "holds" : "fails"));

    D.normalize("end periods and conjugate CM periods");
  }

  auto rep = std::make_shared<DerivationReport>(D.finish());
  absorb_subreports(*rep);
  return rep;
}

}  // namespace

std::shared_ptr<const DerivationReport> replay_factorization(const HCParameter& A, int q, const ReplayOptions& opts) {
  return replay_cached(A, q, opts);
}

std::size_t replay_memo_size() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo().size();
}

std::shared_ptr<const DerivationReport> verify_main_factorization(const HCParameter& A, const ReplayOptions& opts) {
  std::vector<std::string> pre_notes;
  validate_parameter(A, opts, pre_notes);
  const int n = A.n;
  const std::size_t d = A.places();
  const std::size_t v0 = A.v0;
  const int place0 = static_cast<int>(v0);
  const std::string R = rep_tag(n);
  const Normalizer norm = make_normalizer(opts);
  const AllowedClasses allowed_af{false, opts.lvarch};
  const AllowedClasses allowed_tate{true, opts.lvarch};

  std::vector<std::shared_ptr<const DerivationReport>> af;
  for (int q = 0; q <= n - 2; ++q) af.push_back(replay_factorization(A, q, opts));

  const int shift = faulted(opts, "local-period-def") ? 1 : 0;
  auto lpd = [&](int i) { return local_period_definition(R, n, d, v0, i, shift); };
  auto P_lower = [&](int i) { return PeriodSymbol::local_factor(R, n, i, place0); };
  auto q0_def = [&](const std::string& motive, int rank, int place) {
    AxiomPair ax = q0_definition(motive, rank, place);
    if (faulted(opts, "q-period-def")) ax.rhs = ax.rhs.pow(2);
    return ax;
  };

  Derivation top("factorization", Monomial(), norm, allowed_tate);
  top.param("n", std::to_string(n));
  top.param("d", std::to_string(d));
  top.param("v0", std::to_string(v0));
  top.param("A", doubled_rows(A.entries));
  for (const auto& s : pre_notes) top.note(s);
  top.note("checked at iota_v0");
  if (opts.fault) top.note("fault injected: " + *opts.fault);
  DerivationReport parent = top.finish();

  // P^(i) ~ P_0 ... P_i.
  for (int i = 0; i <= n; ++i) {
    Monomial goal(PeriodSymbol::arith_local(R, n, i, place0));
    for (int k = 0; k <= i; ++k) goal.multiply(P_lower(k), -1);
    Derivation T("factorization-telescoping", goal, norm, allowed_af);
    T.param("i", std::to_string(i));
    if (i < n) {
      for (int k = 0; k <= i; ++k) {
        const AxiomPair def = lpd(k);
        T.apply(def.name, def.relation(), 1, def.tags, "P_" + std::to_string(k));
      }
      for (int q = 0; q < i; ++q) {
        AxiomPair s = auto_facto_statement(R, n, d, v0, q);
        if (faulted(opts, "auto-facto")) {
          s.rhs.multiply(PeriodSymbol::arith_local(R, n, q + 1, place0), -2);
          s.rhs.multiply(PeriodSymbol::arith_local(R, n, q, place0), 2);
        }
        T.apply(s.name, s.relation(), 1, s.tags, "q = " + std::to_string(q) + ": " + verdict_name(af[q]->verdict));
        T.subreport(af[q]);
      }
    } else {
      const AxiomPair def = lpd(n);
      T.apply(def.name, def.relation(), 1, def.tags, "P_n");
    }
    T.normalize();
    auto r = std::make_shared<DerivationReport>(T.finish());
    absorb_subreports(*r);
    parent.subreports.push_back(r);
  }

  // P_i ~ Q_i(M).
  std::vector<std::shared_ptr<const DerivationReport>> tate;
  const bool bad_delta = faulted(opts, "tate-delta");
  for (int i = 0; i <= n; ++i) {
    Derivation T("tate-relation", Monomial(P_lower(i)) / Monomial(PeriodSymbol::q_motivic(R, n, i, place0)), norm,
                 allowed_tate);
    T.param("i", std::to_string(i));
    const AxiomPair def = lpd(i);
    T.apply(def.name, def.relation(), -1, def.tags, "P_" + std::to_string(i));
    if (i == 0) {
      const AxiomPair q0 = q0_def(R, n, place0);
      T.apply(q0.name, q0.relation(), 1, q0.tags, "Q_0");
      const AxiomPair del = delta_relation(R, n, place0, bad_delta);
      T.apply(del.name, del.relation(), 1, del.tags);
    } else if (i < n) {
      const AxiomPair tq = q_motivic_relation(R, n, d, i, place0, faulted(opts, "tate-q"));
      T.apply(tq.name, tq.relation(), 1, tq.tags, "Q_i through Q(pi(i-1)) and q(M)");
      for (std::size_t v = 0; v < d; ++v) {
        const AxiomPair del = delta_relation(R, n, static_cast<int>(v), bad_delta);
        T.apply(del.name, del.relation(), -1, del.tags);
      }
    } else {
      for (int l = 0; l < n; ++l) {
        const Monomial lemma = Monomial(P_lower(l)) / Monomial(PeriodSymbol::q_motivic(R, n, l, place0));
        T.apply("tate-lemma", lemma, faulted(opts, "tate-lemma") ? -1 : 1, FieldTagSet{field_of(R)},
                "P_" + std::to_string(l) + " ~ Q_" + std::to_string(l) + ": " + verdict_name(tate[l]->verdict));
        T.subreport(tate[l]);
      }
      const AxiomPair mp = motivic_product_relation(R, n, place0, faulted(opts, "motivic-product"));
      T.apply(mp.name, mp.relation(), 1, mp.tags);
      const AxiomPair q0 = q0_def(R, n, place0);
      T.apply(q0.name, q0.relation(), 1, q0.tags, "Q_0");
      const AxiomPair del = delta_relation(R, n, place0, bad_delta);
      T.apply(del.name, del.relation(), -1, del.tags);
    }
    T.normalize();
    auto r = std::make_shared<DerivationReport>(T.finish());
    absorb_subreports(*r);
    tate.push_back(r);
    parent.subreports.push_back(r);
  }

  absorb_subreports(parent);
  return std::make_shared<DerivationReport>(std::move(parent));
}

namespace {

HodgeType shift_weight(HodgeType h, std::int64_t delta) {
  h.w += delta;
  for (auto& p : h.pairs) p.q += delta;
  return h;
}

}  // namespace

std::shared_ptr<const DerivationReport> verify_main_conjecture(const InfinityType& a, const InfinityType& b,
                                                               HalfInt s0, const ReplayOptions& opts) {
  a.validate();
  b.validate();
  if (a.places() != b.places() || a.places() == 0)
    throw Error(ErrorCode::InvalidInstance, "both infinity types need the same nonzero number of places");
  const int n = a.n, np = b.n;
  const std::size_t d = a.places();
  const std::string R = rep_tag(n);
  const std::string Rp = np == n ? rep_tag(n) + "'" : rep_tag(np);
  const Normalizer norm = make_normalizer(opts);

  RsOptions ro;
  ro.allow_irregular = opts.allow_irregular;
  if (faulted(opts, "rs-value")) ro.corrupt = RsOptions::Corruption{0, 1, 1};
  const AxiomPair rs = axiom_rs_value(RepData{R, a}, RepData{Rp, b}, s0, ro);

  const std::int64_t nnd = static_cast<std::int64_t>(n) * np * static_cast<std::int64_t>(d);
  Monomial deligne(PeriodSymbol::const_class("I_inf", true));
  deligne.multiply(PeriodSymbol::two_pi_i(), -nnd * (n + np - 2) / 2);

  std::int64_t span = 0;
  for (std::size_t v = 0; v < d; ++v) {
    for (const auto& x : a.at(v)) span = std::max(span, x.abs().doubled());
    for (const auto& x : b.at(v)) span = std::max(span, x.abs().doubled());
  }
  const std::int64_t big = 2 * (span + n + np + 2);

  for (std::size_t v = 0; v < d; ++v) {
    const int place = static_cast<int>(v);
    const HodgeType H = hodge_type_from_infinity_type(a, v, false);
    HodgeType Hp = hodge_type_from_infinity_type(b, v, false);
    SplitVector sp = motivic_split_indices(H, Hp);
    if (faulted(opts, "w-prime")) {
      const SplitVector before = sp;
      for (std::int64_t delta : {big, -big}) {
        const HodgeType shifted = shift_weight(Hp, delta);
        const SplitVector moved = motivic_split_indices(H, shifted);
        if (!(moved == before)) {
          Hp = shifted;
          sp = moved;
          break;
        }
      }
    }
    SplitVector sp_prime = motivic_split_indices(Hp, H);
    if (faulted(opts, "split-index") && v == 0) {
      for (int i = 0; i <= n; ++i)
        if (sp.entries[i] > 0) {
          --sp.entries[i];
          ++sp.entries[i < n ? i + 1 : i - 1];
          break;
        }
    }
    for (int j = 0; j <= n; ++j) deligne.multiply(PeriodSymbol::q_upper(R, n, j, place), sp.entries[j]);
    for (int k = 0; k <= np; ++k) deligne.multiply(PeriodSymbol::q_upper(Rp, np, k, place), sp_prime.entries[k]);
  }

  Derivation D("deligne", rs.rhs / deligne, norm, AllowedClasses{true, opts.lvarch});
  D.param("n", std::to_string(n));
  D.param("n'", std::to_string(np));
  D.param("d", std::to_string(d));
  D.param("s0", s0.str());
  D.param("a", doubled_rows(a.a));
  D.param("b", doubled_rows(b.a));
  for (const auto& s : rs.notes) D.note(s);
  D.note("motivic split indices computed at a single coefficient embedding");
  D.note("factorization and Tate relations used as lemmas at every embedding");
  if (opts.fault) D.note("fault injected: " + *opts.fault);
  D.use(rs.name);

  // Q^(j) = Q_0 ... Q_j.
  {
    Monomial f;
    for (const auto& [s, e] : D.current().terms())
      if (s.kind == SymbolKind::QUpper) {
        AxiomPair def = q_upper_definition(s.rep, s.rank, s.index, s.emb.place);
        if (faulted(opts, "q-period-def")) def.rhs.erase(PeriodSymbol::q_motivic(s.rep, s.rank, s.index, s.emb.place));
        f *= def.relation().pow(-e);
      }
    D.apply("q-period-def", f, 1, FieldTagSet{field_of(R), field_of(Rp)}, "expand Q^(j)");
  }
  // Q_l ~ P_l.
  {
    Monomial f;
    for (const auto& [s, e] : D.current().terms())
      if (s.kind == SymbolKind::QMotivic) {
        Monomial lemma = Monomial(PeriodSymbol::local_factor(s.rep, s.rank, s.index, s.emb.place)) / Monomial(s);
        if (faulted(opts, "tate-relation") && s.index == 0)
          lemma = Monomial(PeriodSymbol::local_factor(s.rep, s.rank, 0, s.emb.place));
        f *= lemma.pow(e);
      }
    D.apply("tate-relation", f, 1, FieldTagSet{field_of(R), field_of(Rp)}, "Q_l ~ P_l");
  }
  // P^(k) ~ P_0 ... P_k.
  {
    Monomial f;
    for (const auto& [s, e] : D.current().terms())
      if (s.kind == SymbolKind::ArithLocal) {
        Monomial rel(s);
        const int top_index = faulted(opts, "factorization") ? s.index - 1 : s.index;
        for (int l = 0; l <= top_index; ++l)
          rel.multiply(PeriodSymbol::local_factor(s.rep, s.rank, l, s.emb.place), -1);
        f *= rel.pow(-e);
      }
    D.apply("factorization", f, 1, FieldTagSet{field_of(R), field_of(Rp)}, "P^(k) ~ P_0 ... P_k");
  }
  D.normalize();
  auto rep = std::make_shared<DerivationReport>(D.finish());
  const HalfInt m = s0 + motivic_shift(n, np);
  rep->notes.push_back("motivic critical point m = " + m.str() + "; d n n' m = " +
                       (m * nnd).str());
  return rep;
}

}  // namespace periodcalc
