#include "periodcalc/corpus.hpp"

#include <functional>
#include <set>

namespace periodcalc {

namespace {

std::vector<HalfInt> random_row(std::mt19937_64& rng, int n, std::int64_t spread) {
  std::uniform_int_distribution<std::int64_t> pick(-spread, spread);
  const std::int64_t parity = (n - 1) % 2;
  std::set<std::int64_t, std::greater<>> chosen;
  while (static_cast<int>(chosen.size()) < n) chosen.insert(2 * pick(rng) + parity);
  std::vector<HalfInt> row;
  for (auto x : chosen) row.push_back(HalfInt::from_doubled(x));
  return row;
}

bool has_tie(const InfinityType& a, const InfinityType& b) {
  for (std::size_t v = 0; v < a.places(); ++v)
    for (auto x : a.at(v))
      for (auto y : b.at(v))
        if (x + y == HalfInt{}) return true;
  return false;
}

}  // namespace

InfinityType random_infinity_type(std::mt19937_64& rng, int n, std::size_t d, std::int64_t spread) {
  InfinityType t;
  t.n = n;
  for (std::size_t v = 0; v < d; ++v) t.a.push_back(random_row(rng, n, std::max<std::int64_t>(spread, n)));
  return t;
}

std::vector<PairInstance> generate_pair_corpus(std::uint64_t seed, std::size_t count, const CorpusOptions& opt) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_d(1, opt.max_d);
  std::uniform_int_distribution<int> pick_n(2, opt.max_n);
  std::vector<PairInstance> out;
  while (out.size() < count) {
    const std::size_t d = pick_d(rng);
    const int n = pick_n(rng);
    const int np = std::uniform_int_distribution<int>(1, n - 1)(rng);
    PairInstance p;
    p.index = out.size();
    p.a = random_infinity_type(rng, n, d, opt.spread);
    do p.b = random_infinity_type(rng, np, d, opt.spread);
    while (has_tie(p.a, p.b));
    out.push_back(std::move(p));
  }
  return out;
}

HCParameter random_regular_parameter(std::mt19937_64& rng, int n, std::size_t d, std::int64_t gap, std::size_t v0) {
  std::uniform_int_distribution<std::int64_t> extra(0, 3);
  std::uniform_int_distribution<std::int64_t> offset(-3, 3);
  HCParameter A;
  A.n = n;
  A.v0 = v0;
  for (std::size_t v = 0; v < d; ++v) {
    std::vector<std::int64_t> doubled{2 * offset(rng) + (n - 1) % 2};
    for (int i = 1; i < n; ++i) doubled.push_back(doubled.back() - 2 * (gap + extra(rng)));
    std::vector<HalfInt> row;
    for (auto x : doubled) row.push_back(HalfInt::from_doubled(x));
    A.entries.push_back(std::move(row));
  }
  A.validate();
  return A;
}

}  // namespace periodcalc
