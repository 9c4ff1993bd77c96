#include "periodcalc/half_int.hpp"

#include <stdexcept>

namespace periodcalc {

std::int64_t HalfInt::to_integer() const {
  if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not integral");
  return twice_ / 2;
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace periodcalc
