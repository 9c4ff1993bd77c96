#include "periodcalc/period_symbol.hpp"

#include "periodcalc/half_int.hpp"

namespace periodcalc {

EmbeddingSet sigma(std::size_t d) {
  EmbeddingSet s;
  for (std::size_t v = 0; v < d; ++v) s.insert({static_cast<int>(v), false});
  return s;
}

EmbeddingSet sigma_bar(std::size_t d) {
  EmbeddingSet s;
  for (std::size_t v = 0; v < d; ++v) s.insert({static_cast<int>(v), true});
  return s;
}

bool meets_conjugate(const EmbeddingSet& psi) {
  for (const auto& e : psi)
    if (psi.count(e.conj())) return true;
  return false;
}

namespace {

std::string emb_str(const Embedding& e) { return std::string(e.bar ? "iotabar_" : "iota_") + std::to_string(e.place); }

std::string psi_str(const EmbeddingSet& psi) {
  if (psi.size() == 1) return emb_str(*psi.begin());
  std::string out = "{";
  bool first = true;
  for (const auto& e : psi) {
    if (!first) out += ',';
    out += emb_str(e);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string PeriodSymbol::key() const {
  switch (kind) {
    case SymbolKind::TwoPiI: return "2pi_i";
    case SymbolKind::CMPeriod: return "p(" + chi.str() + "," + psi_str(psi) + ")";
    case SymbolKind::ArithLocal:
      return "P^(" + std::to_string(index) + ")(" + rep + "," + emb_str(emb) + ")";
    case SymbolKind::ArithGlobal: {
      std::string s;
      for (std::size_t i = 0; i < signature.size(); ++i) s += (i ? "," : "") + std::to_string(signature[i]);
      return "P^(I=" + s + ")(" + rep + ")";
    }
    case SymbolKind::LocalFactor: return "P_" + std::to_string(index) + "(" + rep + "," + emb_str(emb) + ")";
    case SymbolKind::QAuto:
      switch (static_cast<QAutoKind>(variant)) {
        case QAutoKind::Descended: return "Q(pi[" + rep + ";q=" + std::to_string(index) + "])";
        case QAutoKind::Twisted: return "Q(pi[" + rep + ";q=" + std::to_string(index) + "]*xi[" + label + "])";
        case QAutoKind::Character: return "Q(xi[" + label + "])";
      }
      break;
    case SymbolKind::QMotivic: return "Q_" + std::to_string(index) + "(M[" + rep + "]," + emb_str(emb) + ")";
    case SymbolKind::QUpper: return "Q^(" + std::to_string(index) + ")(M[" + rep + "]," + emb_str(emb) + ")";
    case SymbolKind::DeltaMotive: return "delta(M[" + rep + "]," + emb_str(emb) + ")";
    case SymbolKind::LValue:
      if (static_cast<LKind>(variant) == LKind::RankinSelberg)
        return "L_RS(" + HalfInt::from_doubled(index).str() + ";" + rep + ")";
      return "L_As(1;" + rep + ";sign=" + std::to_string(index) + ")";
    case SymbolKind::ConstClass: return "C[" + label + "]";
  }
  return "?";
}

PeriodSymbol PeriodSymbol::two_pi_i() { return PeriodSymbol{}; }

PeriodSymbol PeriodSymbol::cm(CharacterExpr chi, EmbeddingSet psi) {
  PeriodSymbol s;
  s.kind = SymbolKind::CMPeriod;
  s.chi = std::move(chi);
  s.psi = std::move(psi);
  return s;
}

PeriodSymbol PeriodSymbol::arith_local(const std::string& rep, int rank, int i, int place) {
  PeriodSymbol s;
  s.kind = SymbolKind::ArithLocal;
  s.rep = rep;
  s.rank = rank;
  s.index = i;
  s.emb = {place, false};
  return s;
}

PeriodSymbol PeriodSymbol::arith_global(const std::string& rep, int rank, std::vector<int> signature) {
  PeriodSymbol s;
  s.kind = SymbolKind::ArithGlobal;
  s.rep = rep;
  s.rank = rank;
  s.signature = std::move(signature);
  return s;
}

PeriodSymbol PeriodSymbol::local_factor(const std::string& rep, int rank, int i, int place) {
  PeriodSymbol s = arith_local(rep, rank, i, place);
  s.kind = SymbolKind::LocalFactor;
  return s;
}

PeriodSymbol PeriodSymbol::q_auto(const std::string& rep, int rank, int q) {
  PeriodSymbol s;
  s.kind = SymbolKind::QAuto;
  s.rep = rep;
  s.rank = rank;
  s.index = q;
  s.variant = static_cast<int>(QAutoKind::Descended);
  return s;
}

PeriodSymbol PeriodSymbol::q_twisted(const std::string& rep, int rank, int q, const std::string& chi_tag) {
  PeriodSymbol s = q_auto(rep, rank, q);
  s.variant = static_cast<int>(QAutoKind::Twisted);
  s.label = chi_tag;
  return s;
}

PeriodSymbol PeriodSymbol::q_character(const std::string& chi_tag) {
  PeriodSymbol s;
  s.kind = SymbolKind::QAuto;
  s.rank = 1;
  s.variant = static_cast<int>(QAutoKind::Character);
  s.label = chi_tag;
  return s;
}

PeriodSymbol PeriodSymbol::q_motivic(const std::string& motive, int rank, int i, int place) {
  PeriodSymbol s = arith_local(motive, rank, i, place);
  s.kind = SymbolKind::QMotivic;
  return s;
}

PeriodSymbol PeriodSymbol::q_upper(const std::string& motive, int rank, int i, int place) {
  PeriodSymbol s = arith_local(motive, rank, i, place);
  s.kind = SymbolKind::QUpper;
  return s;
}

PeriodSymbol PeriodSymbol::delta(const std::string& motive, int rank, int place) {
  PeriodSymbol s = arith_local(motive, rank, 0, place);
  s.kind = SymbolKind::DeltaMotive;
  return s;
}

PeriodSymbol PeriodSymbol::l_rs(const std::string& rep, const std::string& rep_prime, std::int64_t s0_doubled) {
  PeriodSymbol s;
  s.kind = SymbolKind::LValue;
  s.rep = rep + "|" + rep_prime;
  s.index = static_cast<int>(s0_doubled);
  s.variant = static_cast<int>(LKind::RankinSelberg);
  return s;
}

PeriodSymbol PeriodSymbol::l_asai(const std::string& rep, int rank) {
  PeriodSymbol s;
  s.kind = SymbolKind::LValue;
  s.rep = rep;
  s.rank = rank;
  s.index = rank % 2 == 0 ? 1 : -1;
  s.variant = static_cast<int>(LKind::Asai);
  return s;
}

PeriodSymbol PeriodSymbol::const_class(const std::string& label, bool archimedean) {
  PeriodSymbol s;
  s.kind = SymbolKind::ConstClass;
  s.label = label;
  s.archimedean = archimedean;
  return s;
}

}  // namespace periodcalc
