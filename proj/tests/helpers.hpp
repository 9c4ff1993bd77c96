#pragma once

#include <cstdint>
#include <vector>

#include "periodcalc/descent.hpp"
#include "periodcalc/spectral_data.hpp"

namespace testutil {

inline periodcalc::InfinityType it(int n, std::vector<std::vector<std::int64_t>> doubled) {
  return periodcalc::InfinityType::from_doubled(n, doubled);
}

inline periodcalc::InfinityType it1(std::vector<std::int64_t> doubled) {
  const int n = static_cast<int>(doubled.size());
  return periodcalc::InfinityType::from_doubled(n, {doubled});
}

inline std::vector<std::int64_t> doubled_row(const std::vector<periodcalc::HalfInt>& row) {
  std::vector<std::int64_t> out;
  for (auto x : row) out.push_back(x.doubled());
  return out;
}

}  // namespace testutil
