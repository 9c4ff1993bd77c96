#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/spectral_data.hpp"

using namespace periodcalc;
using testutil::it1;

namespace {

HighestWeight weight1(std::vector<std::int64_t> iota, std::vector<std::int64_t> iota_bar = {}) {
  HighestWeight mu;
  mu.n = static_cast<int>(iota.size());
  mu.iota = {iota};
  mu.iota_bar = {iota_bar.empty() ? std::vector<std::int64_t>(iota.size(), 0) : iota_bar};
  return mu;
}

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

TEST_CASE("half integers print and compare exactly") {
  CHECK(half(3).str() == "3/2");
  CHECK(half(-1).str() == "-1/2");
  CHECK(half(8).str() == "4");
  CHECK(half(1) + half(1) == HalfInt::from_int(1));
  CHECK(half(-3).abs() == half(3));
  CHECK_THROWS_AS(half(1).to_integer(), std::domain_error);
}

TEST_CASE("zero weight gives the rho-shifted infinity type") {
  CHECK(infinity_type_from_weight(weight1({0, 0})) == it1({1, -1}));
}

TEST_CASE("weight (2,0,-2) matches the coordinate formula") {
  const InfinityType a = infinity_type_from_weight(weight1({2, 0, -2}));
  CHECK(testutil::doubled_row(a.at(0)) == oracle::infinity_type_from_weight({2, 0, -2}));
  CHECK(a == it1({6, 0, -6}));
}

TEST_CASE("equal weight coordinates stay separated by the rho shift") {
  CHECK(infinity_type_from_weight(weight1({1, 1})) == it1({-1, -3}));
  CHECK(code_of([] { infinity_type_from_weight(weight1({0, 1})); }) == ErrorCode::InvalidInstance);
}

TEST_CASE("inverse map on small cases") {
  const HighestWeight mu = weight_from_infinity_type(it1({1, -1}));
  CHECK(mu.iota.front() == std::vector<std::int64_t>{0, 0});
  CHECK(mu.iota_bar_synthetic);
  CHECK(weight_from_infinity_type(it1({8, 0, -8})).iota.front() == std::vector<std::int64_t>{3, 0, -3});
  InfinityType bad;
  bad.n = 2;
  bad.a = {{HalfInt::from_int(1), HalfInt::from_int(0)}};
  CHECK(code_of([&] { weight_from_infinity_type(bad); }) == ErrorCode::ParityMismatch);
}

TEST_CASE("regularity examples") {
  CHECK(is_m_regular(weight1({2, 0, -2}, {2, 0, -2}), 2));
  CHECK_FALSE(is_m_regular(weight1({2, 0, -2}, {2, 0, -2}), 3));
  CHECK_FALSE(is_m_regular(weight1({10, 5, 0}, {10, 4, 0}), 5));
}

TEST_CASE("dual and conjugate") {
  CHECK(dual_and_conjugate(it1({3, -3}), DualOp::Dual) == it1({3, -3}));
  CHECK(dual_and_conjugate(it1({8, 0, -8}), DualOp::Dual) == it1({8, 0, -8}));
  CHECK(dual_and_conjugate(it1({5, 1}), DualOp::Dual) == it1({-1, -5}));
}

TEST_CASE("CM shape validation") {
  CMShape s = CMShape::standard(3);
  CHECK_NOTHROW(s.validate());
  s.labels[1] = s.labels[0];
  CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("property: weight round trip, gap law, involutions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> step(0, 6), start(-10, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<std::int64_t> mu{start(rng)};
    for (int i = 1; i < n; ++i) mu.push_back(mu.back() - step(rng));
    const HighestWeight w = weight1(mu, mu);
    bool strict = true;
    for (int i = 1; i < n; ++i) strict = strict && mu[i - 1] > mu[i];
    CHECK(is_m_regular(w, 1) == strict);
    const InfinityType a = infinity_type_from_weight(w);
    CHECK(weight_from_infinity_type(a).iota == w.iota);
    CHECK(infinity_type_from_weight(weight_from_infinity_type(a)) == a);
    for (int j = 1; j < n; ++j)
      CHECK(a.at(0)[j - 1] - a.at(0)[j] == HalfInt::from_int(mu[n - j - 1] - mu[n - j] + 1));
    for (DualOp op : {DualOp::Dual, DualOp::Conjugate})
      CHECK(dual_and_conjugate(dual_and_conjugate(a, op), op) == a);
  }
}
