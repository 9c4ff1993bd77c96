#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace periodcalc {

// Basis Hecke characters. XiCheck(R) is the conjugate inverse of the central
// character of R; it is conjugate self-dual, so its conjugate is its inverse.
enum class CharBasis : int { XiCheck = 0, Xi = 1, Psi = 2, Eta = 3, Norm = 4 };

struct CharAtom {
  CharBasis basis = CharBasis::Norm;
  std::string tag;
  bool conj = false;
  auto operator<=>(const CharAtom&) const = default;
};

// Free abelian group on atoms. Normal form: no zero exponents, conjugated
// XiCheck atoms folded into inverses, Norm is conjugation invariant.
class CharacterExpr {
 public:
  CharacterExpr() = default;

  static CharacterExpr atom(CharBasis basis, std::string tag = {}, bool conj = false, std::int64_t e = 1);
  static CharacterExpr xi_check(const std::string& rep) { return atom(CharBasis::XiCheck, rep); }
  static CharacterExpr xi(const std::string& tag) { return atom(CharBasis::Xi, tag); }
  static CharacterExpr psi() { return atom(CharBasis::Psi); }
  static CharacterExpr eta() { return atom(CharBasis::Eta); }
  static CharacterExpr norm() { return atom(CharBasis::Norm); }

  CharacterExpr operator*(const CharacterExpr& o) const;
  CharacterExpr inverse() const;
  CharacterExpr conjugate() const;
  // chi-check = (chi^c)^{-1}.
  CharacterExpr check() const { return conjugate().inverse(); }

  bool is_trivial() const { return exps_.empty(); }
  // A single atom with exponent 1.
  bool is_basis() const;
  const std::map<CharAtom, std::int64_t>& atoms() const { return exps_; }

  std::string str() const;

  auto operator<=>(const CharacterExpr&) const = default;

 private:
  void add(CharAtom a, std::int64_t e);
  std::map<CharAtom, std::int64_t> exps_;
};

}  // namespace periodcalc
