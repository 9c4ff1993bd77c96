#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "periodcalc/character.hpp"

namespace periodcalc {

// iota_v (bar = false) or its conjugate.
struct Embedding {
  int place = 0;
  bool bar = false;
  Embedding conj() const { return {place, !bar}; }
  auto operator<=>(const Embedding&) const = default;
};

using EmbeddingSet = std::set<Embedding>;

EmbeddingSet sigma(std::size_t d);
EmbeddingSet sigma_bar(std::size_t d);
// Psi meets its conjugate set.
bool meets_conjugate(const EmbeddingSet& psi);

enum class SymbolKind : int {
  TwoPiI = 0,
  CMPeriod,
  ArithLocal,
  ArithGlobal,
  LocalFactor,
  QAuto,
  QMotivic,
  QUpper,
  DeltaMotive,
  LValue,
  ConstClass,
};

enum class QAutoKind : int { Descended = 0, Twisted = 1, Character = 2 };
enum class LKind : int { RankinSelberg = 0, Asai = 1 };

// Flat tagged record; unused fields keep their defaults so the defaulted
// ordering is a total order on symbols.
struct PeriodSymbol {
  SymbolKind kind = SymbolKind::TwoPiI;
  std::string rep;    // representation or motive tag; "R|R'" for pairs
  int rank = 0;
  int index = 0;      // superscript i, degree q, doubled s0, or Asai sign
  Embedding emb;
  std::vector<int> signature;
  CharacterExpr chi;
  EmbeddingSet psi;
  int variant = 0;    // QAutoKind or LKind
  std::string label;  // ConstClass
  bool archimedean = false;

  auto operator<=>(const PeriodSymbol&) const = default;

  std::string key() const;

  static PeriodSymbol two_pi_i();
  static PeriodSymbol cm(CharacterExpr chi, EmbeddingSet psi);
  static PeriodSymbol cm(CharacterExpr chi, Embedding e) { return cm(std::move(chi), EmbeddingSet{e}); }
  static PeriodSymbol arith_local(const std::string& rep, int rank, int i, int place);
  static PeriodSymbol arith_global(const std::string& rep, int rank, std::vector<int> signature);
  static PeriodSymbol local_factor(const std::string& rep, int rank, int i, int place);
  static PeriodSymbol q_auto(const std::string& rep, int rank, int q);
  static PeriodSymbol q_twisted(const std::string& rep, int rank, int q, const std::string& chi_tag);
  static PeriodSymbol q_character(const std::string& chi_tag);
  static PeriodSymbol q_motivic(const std::string& motive, int rank, int i, int place);
  static PeriodSymbol q_upper(const std::string& motive, int rank, int i, int place);
  static PeriodSymbol delta(const std::string& motive, int rank, int place);
  static PeriodSymbol l_rs(const std::string& rep, const std::string& rep_prime, std::int64_t s0_doubled);
  static PeriodSymbol l_asai(const std::string& rep, int rank);
  static PeriodSymbol const_class(const std::string& label, bool archimedean = false);
};

}  // namespace periodcalc
