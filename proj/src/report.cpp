#include "periodcalc/report.hpp"

#include <algorithm>
#include <sstream>

namespace periodcalc {

bool FieldTagSet::contains(const FieldTagSet& o) const {
  return std::includes(tags_.begin(), tags_.end(), o.tags_.begin(), o.tags_.end());
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Closed: return "closed";
    case Verdict::ClosedModuloIInf: return "closed-modulo-I_inf";
    case Verdict::Open: return "open";
  }
  return "?";
}

namespace {

enum class Blocking { No, ArchimedeanOnly, Yes };

Blocking blocking(const PeriodSymbol& s, const AllowedClasses& allowed) {
  if (s.kind == SymbolKind::ConstClass) {
    if (s.archimedean && !allowed.lvarch) return Blocking::ArchimedeanOnly;
    return Blocking::No;
  }
  if (s.kind == SymbolKind::TwoPiI && allowed.two_pi_i) return Blocking::No;
  return Blocking::Yes;
}

json strings(const std::set<std::string>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

}  // namespace

Verdict classify(const Monomial& residual, const AllowedClasses& allowed) {
  bool arch = false;
  for (const auto& [s, e] : residual.terms()) {
    switch (blocking(s, allowed)) {
      case Blocking::Yes: return Verdict::Open;
      case Blocking::ArchimedeanOnly: arch = true; break;
      case Blocking::No: break;
    }
  }
  return arch ? Verdict::ClosedModuloIInf : Verdict::Closed;
}

std::vector<std::string> DerivationReport::residual_support() const {
  std::vector<std::string> out;
  for (const auto& [s, e] : residual.terms())
    if (blocking(s, allowed) != Blocking::No) out.push_back(s.key());
  return out;
}

bool DerivationReport::chain_consistent() const {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& st = steps[k];
    if (k == 0 && !(st.before == goal)) return false;
    if (k > 0 && !(steps[k - 1].after == st.before)) return false;
    if (!st.normalization && !(st.before * st.factor == st.after)) return false;
  }
  const Monomial last = steps.empty() ? goal : steps.back().after;
  return last == residual;
}

bool DerivationReport::tags_monotone() const {
  for (std::size_t k = 1; k < steps.size(); ++k)
    if (!steps[k].tags.contains(steps[k - 1].tags)) return false;
  return steps.empty() || tags.contains(steps.back().tags);
}

json monomial_to_json(const Monomial& m) {
  json out = json::array();
  for (const auto& [s, e] : m.terms()) {
    json t;
    t["symbol"] = s.key();
    t["exp"] = e;
    out.push_back(std::move(t));
  }
  return out;
}

json DerivationReport::to_json() const {
  json j;
  j["theorem"] = theorem;
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = std::move(p);
  j["goal"] = monomial_to_json(goal);
  json st = json::array();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    json x;
    x["index"] = k + 1;
    x["axiom"] = s.axiom;
    x["kind"] = s.normalization ? "normalize" : "relation";
    x["note"] = s.note;
    x["factor"] = monomial_to_json(s.factor);
    x["before"] = monomial_to_json(s.before);
    x["after"] = monomial_to_json(s.after);
    x["tags"] = strings(s.tags.labels());
    json rf = json::object();
    for (const auto& [r, c] : s.rules_fired) rf[r] = c;
    x["rules_fired"] = std::move(rf);
    st.push_back(std::move(x));
  }
  j["steps"] = std::move(st);
  j["residual"] = monomial_to_json(residual);
  json sup = json::array();
  for (const auto& s : residual_support()) sup.push_back(s);
  j["residual_support"] = std::move(sup);
  j["two_pi_i_exponent"] = two_pi_i_exponent;
  j["verdict"] = verdict_name(verdict);
  j["lvarch"] = allowed.lvarch;
  j["axioms_used"] = strings(axioms_used);
  j["tags"] = strings(tags.labels());
  json notes_j = json::array();
  for (const auto& n : notes) notes_j.push_back(n);
  j["notes"] = std::move(notes_j);
  json subs = json::array();
  for (const auto& r : subreports) subs.push_back(r->to_json());
  j["subreports"] = std::move(subs);
  return j;
}

std::string DerivationReport::to_text() const {
  std::ostringstream os;
  os << "theorem: " << theorem;
  for (const auto& [k, v] : params) os << "  " << k << "=" << v;
  os << "\n";
  os << "goal: " << goal.str() << " ~ 1\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    os << "  [" << k + 1 << "] " << s.axiom;
    if (!s.note.empty()) os << " -- " << s.note;
    os << "\n";
    if (!s.normalization) os << "      factor: " << s.factor.str() << "\n";
    if (!s.rules_fired.empty()) {
      os << "      rules:";
      for (const auto& [r, c] : s.rules_fired) os << " " << r << " (" << c << ")";
      os << "\n";
    }
    os << "      now: " << s.after.str() << "\n";
  }
  for (const auto& n : notes) os << "note: " << n << "\n";
  for (const auto& r : subreports)
    os << "sub: " << r->theorem << " " << (r->params.empty() ? "" : r->params.back().second) << " -> "
       << verdict_name(r->verdict) << "\n";
  os << "residual: " << residual.str() << "\n";
  const auto sup = residual_support();
  os << "residual support: ";
  if (sup.empty())
    os << (allowed.two_pi_i && residual.exponent(PeriodSymbol::two_pi_i()) != 0 ? "2πi only" : "constants only");
  else
    for (std::size_t i = 0; i < sup.size(); ++i) os << (i ? ", " : "") << sup[i];
  os << "\n";
  if (allowed.two_pi_i) os << "2πi exponent: " << two_pi_i_exponent << "\n";
  os << "verdict: " << verdict_name(verdict) << "\n";
  return os.str();
}

Derivation::Derivation(std::string theorem, Monomial goal, const Normalizer& normalizer, AllowedClasses allowed)
    : current_(goal), normalizer_(normalizer), allowed_(allowed) {
  report_.theorem = std::move(theorem);
  report_.goal = std::move(goal);
  report_.allowed = allowed;
  tags_ = FieldTagSet{"F^Gal"};
}

void Derivation::apply(const std::string& axiom, const Monomial& relation, long long e, const FieldTagSet& tags,
                       const std::string& note) {
  DerivationStep st;
  st.axiom = axiom;
  st.note = note;
  st.factor = relation.pow(e);
  st.before = current_;
  current_ *= st.factor;
  st.after = current_;
  tags_.unite(tags);
  st.tags = tags_;
  report_.axioms_used.insert(axiom);
  report_.steps.push_back(std::move(st));
}

void Derivation::normalize(const std::string& note) {
  DerivationStep st;
  st.axiom = "normalize";
  st.note = note;
  st.normalization = true;
  st.before = current_;
  NormalizeTrace trace;
  current_ = normalizer_.normalize(current_, &trace);
  st.after = current_;
  for (const auto& [r, c] : trace.fired) {
    st.rules_fired[std::string(rule_name(r))] = c;
    report_.axioms_used.insert(std::string(rule_name(r)));
  }
  st.tags = tags_;
  report_.steps.push_back(std::move(st));
}

DerivationReport Derivation::finish() {
  report_.residual = current_;
  report_.tags = tags_;
  report_.two_pi_i_exponent = current_.exponent(PeriodSymbol::two_pi_i());
  report_.verdict = classify(current_, allowed_);
  return report_;
}

DerivationReport assert_equivalent(const Monomial& lhs, const Monomial& rhs, const AllowedClasses& allowed,
                                   const Normalizer& normalizer) {
  Derivation d("equivalence", lhs / rhs, normalizer, allowed);
  d.normalize();
  return d.finish();
}

}  // namespace periodcalc
