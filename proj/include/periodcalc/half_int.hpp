#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace periodcalc {

// An element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) { return HalfInt(doubled); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

  constexpr std::int64_t doubled() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  // Throws std::domain_error unless the value is integral.
  std::int64_t to_integer() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }
  HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  // "3/2", "-1/2", "4".
  std::string str() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

constexpr HalfInt half(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

}  // namespace periodcalc
