#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <random>
#include <thread>
#include <vector>

#include "periodcalc/spectral_data.hpp"

namespace periodcalc {

struct CorpusOptions {
  std::size_t max_d = 3;
  int max_n = 6;
  // Entries are drawn from doubled values in [-2 spread - 1, 2 spread + 1].
  std::int64_t spread = 12;
};

// A tie-free pair of infinity types on the same places.
struct PairInstance {
  std::size_t index = 0;
  InfinityType a;
  InfinityType b;
};

// d in [1, max_d], n in [2, max_n], n' in [1, n - 1]; deterministic in the seed.
std::vector<PairInstance> generate_pair_corpus(std::uint64_t seed, std::size_t count,
                                               const CorpusOptions& opt = {});

// Strictly decreasing random infinity type of rank n on d places.
InfinityType random_infinity_type(std::mt19937_64& rng, int n, std::size_t d, std::int64_t spread);

// Parameter of rank n with every consecutive gap at least `gap` (an integer).
HCParameter random_regular_parameter(std::mt19937_64& rng, int n, std::size_t d, std::int64_t gap,
                                     std::size_t v0 = 0);

// Applies f to every item on worker threads; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F f) -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  const std::size_t chunk = (items.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<std::vector<R>>> parts;
  for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
    const std::size_t hi = std::min(items.size(), lo + chunk);
    parts.push_back(std::async(std::launch::async, [&items, &f, lo, hi] {
      std::vector<R> out;
      out.reserve(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) out.push_back(f(items[i]));
      return out;
    }));
  }
  std::vector<R> all;
  all.reserve(items.size());
  for (auto& p : parts)
    for (auto& r : p.get()) all.push_back(std::move(r));
  return all;
}

}  // namespace periodcalc
