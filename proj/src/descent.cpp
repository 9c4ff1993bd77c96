#include "periodcalc/descent.hpp"

#include <algorithm>
#include <string>

#include "periodcalc/errors.hpp"

namespace periodcalc {

SignatureTuple SignatureTuple::distinguished(int n, std::size_t d, std::size_t v0) {
  SignatureTuple s;
  for (std::size_t v = 0; v < d; ++v) s.rs.emplace_back(v == v0 ? n - 1 : n, v == v0 ? 1 : 0);
  return s;
}

std::vector<int> SignatureTuple::superscripts() const {
  std::vector<int> out;
  for (const auto& [r, s] : rs) out.push_back(s);
  return out;
}

HalfInt hc_min_gap(const HCParameter& A, std::size_t place) {
  const auto& row = A.entries.at(place);
  std::optional<HalfInt> g;
  for (std::size_t i = 1; i < row.size(); ++i)
    if (!g || row[i - 1] - row[i] < *g) g = row[i - 1] - row[i];
  return g.value_or(HalfInt{});
}

bool hc_is_regular(const HCParameter& A, std::int64_t m) {
  for (std::size_t v = 0; v < A.places(); ++v)
    if (A.entries[v].size() > 1 && hc_min_gap(A, v) < HalfInt::from_int(m)) return false;
  return true;
}

namespace {

void require_unmarked(const HCParameter& A) {
  if (A.marked) throw Error(ErrorCode::InvalidInstance, "parameter is already marked");
  A.validate();
}

void require_q(int n, int q, int max_q) {
  if (q < 0 || q > max_q)
    throw Error(ErrorCode::IndexOutOfRange,
                "q = " + std::to_string(q) + " outside 0.." + std::to_string(max_q) + " for n = " + std::to_string(n));
}

void require_gap_two(const HCParameter& A) {
  if (A.entries[A.v0].size() > 1 && hc_min_gap(A, A.v0) < HalfInt::from_int(2))
    throw Error(ErrorCode::NotRegular, "consecutive entries at v0 differ by less than 2");
}

}  // namespace

HCParameter hc_of_q(const HCParameter& A, int q) {
  require_unmarked(A);
  require_q(A.n, q, A.n - 1);
  HCParameter out = A;
  auto& row = out.entries[A.v0];
  out.marked = row[q];
  row.erase(row.begin() + q);
  return out;
}

HCParameter hc_prime_of_q(const HCParameter& A, int q) {
  require_unmarked(A);
  require_q(A.n, q, A.n - 2);
  require_gap_two(A);
  const HalfInt h = HalfInt::from_doubled(1);
  HCParameter out;
  out.n = A.n - 1;
  out.v0 = A.v0;
  for (std::size_t v = 0; v < A.places(); ++v) {
    std::vector<HalfInt> row;
    for (int i = 0; i < A.n - 1; ++i) {
      if (v == A.v0 && i == q) continue;
      row.push_back(A.entries[v][i] - h);
    }
    out.entries.push_back(std::move(row));
  }
  out.marked = A.entries[A.v0][q] + h;
  return out;
}

HodgeType hodge_numbers_H(const HCParameter& A) {
  require_unmarked(A);
  const auto& row = A.entries[A.v0];
  const int n = A.n;
  HodgeType h;
  h.w = n - 1;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t twice = -row[n - i].doubled() + (n - 1);
    if (twice % 2) throw Error(ErrorCode::ParityMismatch, "non-integral Hodge number");
    h.pairs.push_back({twice / 2, h.w - twice / 2});
  }
  return h;
}

HodgeType hodge_numbers_Hprime(const HCParameter& A, int q) {
  require_unmarked(A);
  require_q(A.n, q, A.n - 2);
  require_gap_two(A);
  const auto& row = A.entries[A.v0];
  const int n = A.n;
  HodgeType h;
  h.w = n - 2;
  for (int i = 0; i < n - 1; ++i) {
    const std::int64_t twice = row[i].doubled() + (i == q ? n - 1 : n - 3);
    if (twice % 2) throw Error(ErrorCode::ParityMismatch, "non-integral Hodge number");
    h.pairs.push_back({twice / 2, h.w - twice / 2});
  }
  std::sort(h.pairs.begin(), h.pairs.end(), [](const HodgePair& l, const HodgePair& r) { return l.p > r.p; });
  return h;
}

InfinityType pi_infinity_type(const HCParameter& A) {
  require_unmarked(A);
  InfinityType a;
  a.n = A.n;
  for (const auto& row : A.entries) {
    std::vector<HalfInt> r;
    for (auto it = row.rbegin(); it != row.rend(); ++it) r.push_back(-*it);
    a.a.push_back(std::move(r));
  }
  a.validate();
  return a;
}

InfinityType pi_prime_infinity_type(const HCParameter& A, int q) {
  require_unmarked(A);
  require_q(A.n, q, A.n - 2);
  require_gap_two(A);
  const HalfInt h = HalfInt::from_doubled(1);
  InfinityType b;
  b.n = A.n - 1;
  for (std::size_t v = 0; v < A.places(); ++v) {
    std::vector<HalfInt> r;
    for (int j = 0; j < A.n - 1; ++j)
      r.push_back((v == A.v0 && j == q) ? A.entries[v][j] + h : A.entries[v][j] - h);
    std::sort(r.begin(), r.end(), std::greater<>());
    b.a.push_back(std::move(r));
  }
  b.validate();
  return b;
}

HCParameter hc_from_infinity_type(const InfinityType& b, std::size_t v0) {
  HCParameter A;
  A.n = b.n;
  A.v0 = v0;
  for (const auto& row : b.a) {
    std::vector<HalfInt> r;
    for (auto it = row.rbegin(); it != row.rend(); ++it) r.push_back(-*it);
    A.entries.push_back(std::move(r));
  }
  A.validate();
  return A;
}

int coh_degree_prime(int n, int q) {
  require_q(n, q, n - 2);
  return n - q - 2;
}

}  // namespace periodcalc
