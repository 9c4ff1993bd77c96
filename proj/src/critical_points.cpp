#include "periodcalc/critical_points.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "periodcalc/errors.hpp"

namespace periodcalc {

bool CriticalSet::contains(HalfInt s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

std::string CriticalSet::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? ", " : "") << members[i].str();
  os << '}';
  return os.str();
}

namespace {

void require_pair(const InfinityType& a, const InfinityType& b) {
  if (a.n == 0 || b.n == 0) throw Error(ErrorCode::RankZero, "rank zero representation");
  if (a.places() != b.places()) throw Error(ErrorCode::InvalidInstance, "place sets differ");
}

}  // namespace

bool has_critical_points(const InfinityType& a, const InfinityType& b) {
  require_pair(a, b);
  for (std::size_t v = 0; v < a.places(); ++v)
    for (auto x : a.at(v))
      for (auto y : b.at(v))
        if (x + y == HalfInt{}) return false;
  return true;
}

HalfInt critical_bound(const InfinityType& a, const InfinityType& b) {
  require_pair(a, b);
  std::optional<HalfInt> m;
  for (std::size_t v = 0; v < a.places(); ++v)
    for (auto x : a.at(v))
      for (auto y : b.at(v)) {
        HalfInt s = (x + y).abs();
        if (!m || s < *m) m = s;
      }
  return m.value_or(HalfInt{});
}

CriticalSet critical_set(const InfinityType& a, const InfinityType& b) {
  if (!has_critical_points(a, b)) throw Error(ErrorCode::NoCriticalPoints, "some a_{v,i} + b_{v,j} vanishes");
  const HalfInt m = critical_bound(a, b);
  CriticalSet cs;
  cs.anchor = HalfInt::from_doubled(((a.n - b.n) % 2 + 2) % 2);
  cs.lower = -m;
  cs.upper = m;
  // Smallest lattice point strictly above -m.
  std::int64_t start = -m.doubled() + 1;
  if (((start - cs.anchor.doubled()) % 2 + 2) % 2 != 0) ++start;
  for (std::int64_t s = start; s <= m.doubled(); s += 2) cs.members.push_back(HalfInt::from_doubled(s));
  return cs;
}

std::vector<std::int64_t> motivic_critical_set(const std::vector<HodgeType>& types) {
  if (types.empty()) return {};
  const std::int64_t w = types.front().w;
  std::optional<std::int64_t> m2;  // min |2p - w|
  for (const auto& h : types) {
    if (h.w != w) throw Error(ErrorCode::InvalidInstance, "Hodge types of different weights");
    for (const auto& pq : h.pairs) {
      std::int64_t dist = 2 * pq.p - w;
      if (dist == 0) throw Error(ErrorCode::MiddleHodgeWeight, "p = w/2 occurs");
      dist = dist < 0 ? -dist : dist;
      if (!m2 || dist < *m2) m2 = dist;
    }
  }
  std::vector<std::int64_t> out;
  if (!m2) return out;
  // -m2 + w < 2k <= m2 + w
  for (std::int64_t twice = -*m2 + w + 1; twice <= *m2 + w; ++twice)
    if (twice % 2 == 0) out.push_back(twice / 2);
  return out;
}

std::vector<HodgeType> tensor_hodge_types(const InfinityType& a, const InfinityType& b) {
  require_pair(a, b);
  std::vector<HodgeType> out;
  for (std::size_t v = 0; v < a.places(); ++v)
    for (bool barred : {false, true}) {
      const HodgeType h = hodge_type_from_infinity_type(a, v, barred);
      const HodgeType hp = hodge_type_from_infinity_type(b, v, barred);
      HodgeType t;
      t.w = h.w + hp.w;
      for (const auto& x : h.pairs)
        for (const auto& y : hp.pairs) t.pairs.push_back({x.p + y.p, t.w - x.p - y.p});
      std::sort(t.pairs.begin(), t.pairs.end(), [](const HodgePair& l, const HodgePair& r) { return l.p > r.p; });
      out.push_back(std::move(t));
    }
  return out;
}

HalfInt motivic_shift(int n, int n_prime) { return HalfInt::from_doubled(n + n_prime - 2); }

bool check_shift_dictionary(const InfinityType& a, const InfinityType& b) {
  const CriticalSet cs = critical_set(a, b);
  const auto motivic = motivic_critical_set(tensor_hodge_types(a, b));
  const HalfInt shift = motivic_shift(a.n, b.n);
  std::vector<std::int64_t> shifted;
  for (auto s : cs.members) {
    const HalfInt m = s + shift;
    if (!m.is_integer()) return false;
    shifted.push_back(m.to_integer());
  }
  return shifted == motivic;
}

}  // namespace periodcalc
