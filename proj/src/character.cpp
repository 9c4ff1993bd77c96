#include "periodcalc/character.hpp"

namespace periodcalc {

void CharacterExpr::add(CharAtom a, std::int64_t e) {
  if (a.basis == CharBasis::XiCheck && a.conj) {
    a.conj = false;
    e = -e;
  }
  if (a.basis == CharBasis::Norm) a.conj = false;
  if (e == 0) return;
  auto& slot = exps_[a];
  slot += e;
  if (slot == 0) exps_.erase(a);
}

CharacterExpr CharacterExpr::atom(CharBasis basis, std::string tag, bool conj, std::int64_t e) {
  CharacterExpr c;
  c.add(CharAtom{basis, std::move(tag), conj}, e);
  return c;
}

CharacterExpr CharacterExpr::operator*(const CharacterExpr& o) const {
  CharacterExpr out = *this;
  for (const auto& [a, e] : o.exps_) out.add(a, e);
  return out;
}

CharacterExpr CharacterExpr::inverse() const {
  CharacterExpr out;
  for (const auto& [a, e] : exps_) out.add(a, -e);
  return out;
}

CharacterExpr CharacterExpr::conjugate() const {
  CharacterExpr out;
  for (const auto& [a, e] : exps_) {
    CharAtom c = a;
    c.conj = !c.conj;
    out.add(c, e);
  }
  return out;
}

bool CharacterExpr::is_basis() const { return exps_.size() == 1 && exps_.begin()->second == 1; }

std::string CharacterExpr::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [a, e] : exps_) {
    if (!out.empty()) out += '*';
    switch (a.basis) {
      case CharBasis::XiCheck: out += "xicheck[" + a.tag + "]"; break;
      case CharBasis::Xi: out += "xi[" + a.tag + "]"; break;
      case CharBasis::Psi: out += "psi"; break;
      case CharBasis::Eta: out += "eta"; break;
      case CharBasis::Norm: out += "norm"; break;
    }
    if (a.conj) out += "^c";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace periodcalc
