#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "periodcalc/corpus.hpp"
#include "periodcalc/descent.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/hodge_split.hpp"

using namespace periodcalc;
using testutil::doubled_row;

namespace {

HCParameter A1(std::vector<std::int64_t> doubled) { return HCParameter::from_doubled({doubled}, 0); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInstance;
}

}  // namespace

TEST_CASE("distinguished signature") {
  const SignatureTuple s = SignatureTuple::distinguished(3, 2, 1);
  CHECK(s.superscripts() == std::vector<int>{0, 1});
  CHECK(s.rs[0] == std::pair<int, int>{3, 0});
}

TEST_CASE("marked parameters") {
  const HCParameter a1 = hc_of_q(A1({8, 0, -8}), 1);
  CHECK(doubled_row(a1.entries[0]) == std::vector<std::int64_t>{8, -8});
  CHECK(a1.marked == half(0));
  const HCParameter a0 = hc_of_q(A1({8, 0, -8}), 0);
  CHECK(doubled_row(a0.entries[0]) == std::vector<std::int64_t>{0, -8});
  CHECK(a0.marked == half(8));
  CHECK(code_of([] { hc_of_q(A1({8, 0, -8}), 3); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("rank n-1 parameters") {
  const HCParameter p1 = hc_prime_of_q(A1({8, 0, -8}), 1);
  CHECK(doubled_row(p1.entries[0]) == std::vector<std::int64_t>{7});
  CHECK(p1.marked == half(1));
  const HCParameter p0 = hc_prime_of_q(A1({8, 0, -8}), 0);
  CHECK(doubled_row(p0.entries[0]) == std::vector<std::int64_t>{-1});
  CHECK(p0.marked == half(9));
  CHECK(code_of([] { hc_prime_of_q(A1({2, 0, -2}), 0); }) == ErrorCode::NotRegular);
  CHECK(code_of([] { hc_prime_of_q(A1({8, 0, -8}), 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("Hodge numbers") {
  CHECK(hodge_numbers_H(A1({8, 0, -8})).ps() == std::vector<std::int64_t>{5, 1, -3});
  CHECK(hodge_numbers_H(A1({1, -1})).ps() == std::vector<std::int64_t>{1, 0});
  const HodgeType h1 = hodge_numbers_Hprime(A1({8, 0, -8}), 1);
  CHECK(h1.ps() == std::vector<std::int64_t>{4, 1});
  CHECK(h1.pairs[0].q == -3);
  CHECK(h1.pairs[1].q == 0);
  CHECK(hodge_numbers_Hprime(A1({8, 0, -8}), 0).ps() == std::vector<std::int64_t>{5, 0});
  CHECK(code_of([] { hodge_numbers_Hprime(A1({2, 0, -2}), 0); }) == ErrorCode::NotRegular);
}

TEST_CASE("infinity type of the descended pair") {
  const InfinityType b = pi_prime_infinity_type(A1({8, 0, -8}), 1);
  CHECK(doubled_row(b.at(0)) == std::vector<std::int64_t>{7, 1});
  CHECK(automorphic_split_indices(pi_infinity_type(A1({8, 0, -8})), b, 0, false).entries ==
        std::vector<int>{0, 2, 0, 0});
  CHECK(coh_degree_prime(3, 1) == 0);
  CHECK(coh_degree_prime(6, 0) == 4);
  CHECK(code_of([] { coh_degree_prime(3, 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(is_holomorphic_degree(0));
  CHECK_FALSE(is_holomorphic_degree(1));
}

TEST_CASE("property: multisets, Hodge agreement and regularity propagation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    const std::size_t d = 1 + trial % 3;
    const HCParameter A = random_regular_parameter(rng, n, d, n + 4, trial % d);
    CHECK(hodge_numbers_H(A) == hodge_type_from_infinity_type(pi_infinity_type(A), A.v0, true));
    for (int q = 0; q <= n - 2; ++q) {
      const HCParameter P = hc_prime_of_q(A, q);
      const InfinityType b = pi_prime_infinity_type(A, q);
      for (std::size_t v = 0; v < d; ++v) CHECK(P.multiset_at(v) == b.at(v));
      if (b.n > 1) CHECK(b.min_gap() >= HalfInt::from_int(n + 3));
      CHECK(hc_is_regular(hc_from_infinity_type(b, A.v0), n + 3));
      CHECK_THROWS_AS(hc_prime_of_q(A, n - 1), Error);
    }
  }
}
