#include "periodcalc/hodge_split.hpp"

#include <optional>
#include <sstream>

#include "periodcalc/errors.hpp"

namespace periodcalc {

void HodgeType::validate() const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].p + pairs[i].q != w) throw Error(ErrorCode::InvalidInstance, "Hodge pair does not sum to w");
    if (i > 0 && !(pairs[i - 1].p > pairs[i].p))
      throw Error(ErrorCode::InvalidInstance, "Hodge type is not regular");
  }
}

std::vector<std::int64_t> HodgeType::ps() const {
  std::vector<std::int64_t> out;
  for (const auto& pq : pairs) out.push_back(pq.p);
  return out;
}

int SplitVector::sum() const {
  int s = 0;
  for (int x : entries) s += x;
  return s;
}

bool SplitVector::is_palindromic() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != entries[entries.size() - 1 - i]) return false;
  return true;
}

std::string SplitVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  os << ')';
  return os.str();
}

HodgeType hodge_type_from_infinity_type(const InfinityType& a, std::size_t place, bool barred) {
  const auto& row = a.at(place);
  const int n = a.n;
  HodgeType h;
  h.w = n - 1;
  for (int i = 1; i <= n; ++i) {
    std::int64_t twice_p = barred ? row[i - 1].doubled() + h.w : -row[n - i].doubled() + h.w;
    if (twice_p % 2 != 0) throw Error(ErrorCode::ParityMismatch, "non-integral Hodge number");
    h.pairs.push_back({twice_p / 2, h.w - twice_p / 2});
  }
  return h;
}

namespace {

// Open interval (lo, hi) on doubled values; nullopt is the infinite sentinel.
struct Gap {
  std::optional<std::int64_t> hi;
  std::optional<std::int64_t> lo;
  bool contains(std::int64_t x) const { return (!hi || x < *hi) && (!lo || x > *lo); }
};

void require_tie_free(const std::vector<HalfInt>& a, const std::vector<HalfInt>& b, std::size_t place) {
  for (auto x : a)
    for (auto y : b)
      if (x + y == HalfInt{})
        throw Error(ErrorCode::TieDetected, "b = " + y.str() + " equals -a at place " + std::to_string(place));
}

}  // namespace

SplitVector automorphic_split_indices(const InfinityType& a, const InfinityType& b, std::size_t place,
                                      bool barred) {
  if (a.places() != b.places()) throw Error(ErrorCode::InvalidInstance, "place sets differ");
  const auto& ra = a.at(place);
  const auto& rb = b.at(place);
  require_tie_free(ra, rb, place);
  const int n = a.n;
  SplitVector sp;
  sp.n = n;
  sp.entries.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    Gap g;
    if (!barred) {
      // -a_{n+1-i} > b > -a_{n-i}, with a_0 = +inf, a_{n+1} = -inf.
      if (i >= 1) g.hi = -ra[n - i].doubled();
      if (i <= n - 1) g.lo = -ra[n - i - 1].doubled();
      for (auto y : rb)
        if (g.contains(y.doubled())) ++sp.entries[i];
    } else {
      // a_i > -b > a_{i+1}.
      if (i >= 1) g.hi = ra[i - 1].doubled();
      if (i <= n - 1) g.lo = ra[i].doubled();
      for (auto y : rb)
        if (g.contains(-y.doubled())) ++sp.entries[i];
    }
  }
  return sp;
}

SplitVector motivic_split_indices(const HodgeType& h, const HodgeType& h_prime) {
  const std::int64_t wt = h.w + h_prime.w;
  for (const auto& x : h.pairs)
    for (const auto& y : h_prime.pairs)
      if (2 * (x.p + y.p) == wt) throw Error(ErrorCode::MiddleHodgeWeight, "middle Hodge weight in tensor product");
  const int n = static_cast<int>(h.pairs.size());
  SplitVector sp;
  sp.n = n;
  sp.entries.assign(n + 1, 0);
  // Doubled: 2 p_i - wt > -2 q_j > 2 p_{i+1} - wt, with p_0 = +inf, p_{n+1} = -inf.
  for (int i = 0; i <= n; ++i) {
    Gap g;
    if (i >= 1) g.hi = 2 * h.pairs[i - 1].p - wt;
    if (i <= n - 1) g.lo = 2 * h.pairs[i].p - wt;
    for (const auto& y : h_prime.pairs)
      if (g.contains(-2 * y.p)) ++sp.entries[i];
  }
  return sp;
}

bool reflection_check(const InfinityType& a, const InfinityType& b, std::size_t place) {
  const auto ac = dual_and_conjugate(a, DualOp::Conjugate);
  const auto bc = dual_and_conjugate(b, DualOp::Conjugate);
  const auto conj = automorphic_split_indices(ac, bc, place, false);
  const auto bar = automorphic_split_indices(a, b, place, true);
  const auto plain = automorphic_split_indices(a, b, place, false);
  for (int i = 0; i <= a.n; ++i) {
    if (conj.entries[i] != bar.entries[i]) return false;
    if (bar.entries[i] != plain.entries[a.n - i]) return false;
  }
  return true;
}

}  // namespace periodcalc
