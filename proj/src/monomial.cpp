#include "periodcalc/monomial.hpp"

namespace periodcalc {

Monomial::Monomial(const PeriodSymbol& s, std::int64_t e) { multiply(s, e); }

std::int64_t Monomial::exponent(const PeriodSymbol& s) const {
  auto it = e_.find(s);
  return it == e_.end() ? 0 : it->second;
}

void Monomial::multiply(const PeriodSymbol& s, std::int64_t e) {
  if (e == 0) return;
  auto [it, inserted] = e_.try_emplace(s, e);
  if (!inserted) {
    it->second += e;
    if (it->second == 0) e_.erase(it);
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  out *= o;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [s, e] : o.e_) multiply(s, e);
  return *this;
}

Monomial Monomial::pow(std::int64_t k) const {
  Monomial out;
  if (k == 0) return out;
  for (const auto& [s, e] : e_) out.e_.emplace(s, e * k);
  return out;
}

std::string Monomial::str() const {
  if (e_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : e_) {
    if (!out.empty()) out += " * ";
    out += s.key();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace periodcalc
