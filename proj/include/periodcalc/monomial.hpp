#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "periodcalc/period_symbol.hpp"

namespace periodcalc {

// Finite exponent map; zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const PeriodSymbol& s, std::int64_t e = 1);

  static Monomial unit() { return {}; }

  std::int64_t exponent(const PeriodSymbol& s) const;
  void multiply(const PeriodSymbol& s, std::int64_t e);
  void erase(const PeriodSymbol& s) { e_.erase(s); }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial inverse() const { return pow(-1); }
  Monomial pow(std::int64_t k) const;

  bool is_unit() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  const std::map<PeriodSymbol, std::int64_t>& terms() const { return e_; }

  // "P^(1)(Pi3,iota_0)^2 * 2pi_i^-1", or "1".
  std::string str() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::map<PeriodSymbol, std::int64_t> e_;
};

inline Monomial operator*(const PeriodSymbol& a, const PeriodSymbol& b) { return Monomial(a) * Monomial(b); }

}  // namespace periodcalc
