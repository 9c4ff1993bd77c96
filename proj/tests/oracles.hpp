#pragma once

// Brute-force reference evaluators. They work on plain doubled integers and
// share no code with the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;  // doubled values, strictly decreasing

// a_j = -mu_{n-j+1} + (n+1)/2 - j, doubled.
inline Row infinity_type_from_weight(const std::vector<std::int64_t>& mu) {
  const auto n = static_cast<std::int64_t>(mu.size());
  Row a;
  for (std::int64_t j = 1; j <= n; ++j) a.push_back(-2 * mu[n - j] + (n + 1) - 2 * j);
  return a;
}

// sp(i) = #{j : -a_{n+1-i} > b_j > -a_{n-i}}: the gap of b_j is the number
// of entries -a_k lying above it.
inline std::vector<int> split_unbarred(const Row& a, const Row& b) {
  const std::size_t n = a.size();
  std::vector<int> sp(n + 1, 0);
  for (auto y : b) {
    int above = 0;
    for (auto x : a)
      if (-x > y) ++above;
    sp[above] += 1;
  }
  return sp;
}

// sp(i) = #{j : a_i > -b_j > a_{i+1}} with a_0 = +inf, a_{n+1} = -inf.
inline std::vector<int> split_barred(const Row& a, const Row& b) {
  const std::size_t n = a.size();
  std::vector<int> sp(n + 1, 0);
  for (auto y : b) {
    int above = 0;
    for (auto x : a)
      if (x > -y) ++above;
    sp[above] += 1;
  }
  return sp;
}

inline bool any_tie(const std::vector<Row>& a, const std::vector<Row>& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    for (auto x : a[v])
      for (auto y : b[v])
        if (x + y == 0) return true;
  return false;
}

// Doubled s in (anchor + Z) within a window, tested against every pair directly.
inline std::vector<std::int64_t> critical_scan(const std::vector<Row>& a, const std::vector<Row>& b,
                                               std::int64_t window = 40) {
  const std::int64_t n = static_cast<std::int64_t>(a.front().size());
  const std::int64_t np = static_cast<std::int64_t>(b.front().size());
  std::vector<std::int64_t> out;
  for (std::int64_t s = -window; s <= window; ++s) {
    if (((s - (n - np)) % 2 + 2) % 2 != 0) continue;
    bool ok = true;
    for (std::size_t v = 0; v < a.size() && ok; ++v)
      for (auto x : a[v])
        for (auto y : b[v]) {
          const std::int64_t m = std::llabs(x + y);
          if (!(-m < s && s <= m)) ok = false;
        }
    if (ok) out.push_back(s);
  }
  return out;
}

// Integers m with -min|p - w/2| + w/2 < m <= min|p - w/2| + w/2, scanning a window.
inline std::vector<std::int64_t> motivic_scan(const std::vector<std::int64_t>& ps, std::int64_t w,
                                              std::int64_t window = 40) {
  std::int64_t mn = std::numeric_limits<std::int64_t>::max();
  for (auto p : ps) mn = std::min<std::int64_t>(mn, std::llabs(2 * p - w));  // doubled distance
  std::vector<std::int64_t> out;
  for (std::int64_t m = -window; m <= window; ++m)
    if (-mn + w < 2 * m && 2 * m <= mn + w) out.push_back(m);
  return out;
}

// Closed-form split tables for the descended pair at v0 and elsewhere.
inline std::vector<int> descended_pi_v0(int n, int q) {
  std::vector<int> sp(n + 1, 0);
  for (int i = 0; i <= n; ++i) sp[i] = (i == q) ? 2 : ((i == 0 || i == q + 1 || i == n) ? 0 : 1);
  return sp;
}
inline std::vector<int> descended_pi_elsewhere(int n) {
  std::vector<int> sp(n + 1, 1);
  sp.front() = 0;
  sp.back() = 0;
  return sp;
}

// Table forced by the critical-value formula at s0 = 1/2: sp(i) = [1 <= i <= n-1] + [i = q] - [i = q + 1].
inline std::vector<int> critical_value_pi_v0(int n, int q) {
  std::vector<int> sp(n + 1, 0);
  for (int i = 0; i <= n; ++i) sp[i] = (1 <= i && i <= n - 1) + (i == q) - (i == q + 1);
  return sp;
}

}  // namespace oracle
