#include "periodcalc/spectral_data.hpp"

#include <algorithm>
#include <set>

#include "periodcalc/errors.hpp"

namespace periodcalc {

void CMShape::validate() const {
  if (labels.empty()) throw Error(ErrorCode::InvalidInstance, "d must be at least 1");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(ErrorCode::InvalidInstance, "place labels must be distinct");
  if (v0 && *v0 >= labels.size()) throw Error(ErrorCode::InvalidInstance, "v0 index out of range");
}

CMShape CMShape::standard(std::size_t d) {
  CMShape s;
  for (std::size_t i = 0; i < d; ++i) s.labels.push_back("v" + std::to_string(i + 1));
  s.v0 = 0;
  return s;
}

bool HighestWeight::is_dominant() const {
  auto weakly_decreasing = [](const std::vector<std::int64_t>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
  };
  for (const auto& v : iota)
    if (!weakly_decreasing(v)) return false;
  for (const auto& v : iota_bar)
    if (!weakly_decreasing(v)) return false;
  return true;
}

void InfinityType::validate() const {
  if (n < 0) throw Error(ErrorCode::InvalidInstance, "negative rank");
  const std::int64_t parity = ((n - 1) % 2 + 2) % 2;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (static_cast<int>(a[v].size()) != n)
      throw Error(ErrorCode::InvalidInstance, "place " + std::to_string(v) + " has wrong length");
    for (std::size_t i = 0; i < a[v].size(); ++i) {
      if (((a[v][i].doubled() % 2) + 2) % 2 != parity)
        throw Error(ErrorCode::ParityMismatch, "entry " + a[v][i].str() + " not in Z + (n-1)/2");
      if (i > 0 && !(a[v][i - 1] > a[v][i]))
        throw Error(ErrorCode::TiedEntries, "entries not strictly decreasing at place " + std::to_string(v));
    }
  }
}

InfinityType InfinityType::from_doubled(int n, const std::vector<std::vector<std::int64_t>>& doubled) {
  InfinityType t;
  t.n = n;
  for (const auto& row : doubled) {
    std::vector<HalfInt> r;
    for (auto x : row) r.push_back(HalfInt::from_doubled(x));
    t.a.push_back(std::move(r));
  }
  t.validate();
  return t;
}

std::vector<std::vector<std::int64_t>> InfinityType::to_doubled() const {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : a) {
    std::vector<std::int64_t> r;
    for (auto x : row) r.push_back(x.doubled());
    out.push_back(std::move(r));
  }
  return out;
}

HalfInt InfinityType::min_gap() const {
  std::optional<HalfInt> best;
  for (const auto& row : a)
    for (std::size_t i = 1; i < row.size(); ++i) {
      HalfInt g = row[i - 1] - row[i];
      if (!best || g < *best) best = g;
    }
  return best.value_or(HalfInt{});
}

std::vector<HalfInt> HCParameter::multiset_at(std::size_t place) const {
  std::vector<HalfInt> out = entries.at(place);
  if (marked && place == v0) out.push_back(*marked);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void HCParameter::validate() const {
  if (entries.empty()) throw Error(ErrorCode::InvalidInstance, "parameter has no places");
  if (v0 >= entries.size()) throw Error(ErrorCode::InvalidInstance, "v0 out of range");
  for (std::size_t v = 0; v < entries.size(); ++v) {
    const auto& row = entries[v];
    std::size_t expect = static_cast<std::size_t>(n) - ((marked && v == v0) ? 1 : 0);
    if (row.size() != expect) throw Error(ErrorCode::InvalidInstance, "parameter row has wrong length");
    for (std::size_t i = 1; i < row.size(); ++i)
      if (!(row[i - 1] > row[i])) throw Error(ErrorCode::TiedEntries, "parameter not strictly decreasing");
  }
}

HCParameter HCParameter::from_doubled(const std::vector<std::vector<std::int64_t>>& doubled, std::size_t v0) {
  HCParameter p;
  p.n = doubled.empty() ? 0 : static_cast<int>(doubled.front().size());
  p.v0 = v0;
  for (const auto& row : doubled) {
    std::vector<HalfInt> r;
    for (auto x : row) r.push_back(HalfInt::from_doubled(x));
    p.entries.push_back(std::move(r));
  }
  p.validate();
  return p;
}

bool HCParameter::operator==(const HCParameter& o) const {
  if (n != o.n || v0 != o.v0 || marked != o.marked || entries.size() != o.entries.size()) return false;
  for (std::size_t v = 0; v < entries.size(); ++v) {
    auto x = entries[v], y = o.entries[v];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  return true;
}

// a_{v,j} = -mu_{n-j+1} + (n+1)/2 - j, in doubled form.
InfinityType infinity_type_from_weight(const HighestWeight& mu) {
  if (!mu.is_dominant()) throw Error(ErrorCode::InvalidInstance, "highest weight is not dominant");
  InfinityType t;
  t.n = mu.n;
  for (const auto& row : mu.iota) {
    if (static_cast<int>(row.size()) != mu.n) throw Error(ErrorCode::InvalidInstance, "weight row has wrong length");
    std::vector<HalfInt> r;
    for (int j = 1; j <= mu.n; ++j)
      r.push_back(HalfInt::from_doubled(-2 * row[mu.n - j] + (mu.n + 1) - 2 * j));
    t.a.push_back(std::move(r));
  }
  t.validate();
  return t;
}

// mu_{n-j+1} = -a_j + (n+1)/2 - j.
HighestWeight weight_from_infinity_type(const InfinityType& a) {
  const std::int64_t parity = ((a.n - 1) % 2 + 2) % 2;
  for (const auto& row : a.a)
    for (auto x : row)
      if (((x.doubled() % 2) + 2) % 2 != parity)
        throw Error(ErrorCode::ParityMismatch, "entry " + x.str() + " not in Z + (n-1)/2");
  HighestWeight mu;
  mu.n = a.n;
  mu.iota_bar_synthetic = true;
  for (const auto& row : a.a) {
    std::vector<std::int64_t> m(a.n);
    for (int j = 1; j <= a.n; ++j) {
      std::int64_t twice = -row[j - 1].doubled() + (a.n + 1) - 2 * j;
      m[a.n - j] = twice / 2;
    }
    mu.iota.push_back(m);
    mu.iota_bar.emplace_back(a.n, 0);
  }
  return mu;
}

bool is_m_regular(const HighestWeight& mu, std::int64_t m) {
  auto ok = [m](const std::vector<std::vector<std::int64_t>>& rows) {
    for (const auto& r : rows)
      for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] - r[i] < m) return false;
    return true;
  };
  return ok(mu.iota) && ok(mu.iota_bar);
}

InfinityType dual_and_conjugate(const InfinityType& a, DualOp) {
  // Both operations act on the stored list as negate-and-reverse.
  InfinityType out;
  out.n = a.n;
  for (const auto& row : a.a) {
    std::vector<HalfInt> r;
    for (auto it = row.rbegin(); it != row.rend(); ++it) r.push_back(-*it);
    out.a.push_back(std::move(r));
  }
  return out;
}

}  // namespace periodcalc
