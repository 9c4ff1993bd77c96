#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "periodcalc/corpus.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/hodge_split.hpp"

using namespace periodcalc;
using testutil::it1;

TEST_CASE("Hodge types from infinity types") {
  const HodgeType h = hodge_type_from_infinity_type(it1({3, -3}), 0, false);
  CHECK(h.w == 1);
  CHECK(h.ps() == std::vector<std::int64_t>{2, -1});
  CHECK(hodge_type_from_infinity_type(it1({3, -3}), 0, true) == h);
  const HodgeType h3 = hodge_type_from_infinity_type(it1({8, 0, -8}), 0, false);
  CHECK(h3.w == 2);
  CHECK(h3.ps() == std::vector<std::int64_t>{5, 1, -3});
}

TEST_CASE("automorphic split indices of the descended pair") {
  CHECK(automorphic_split_indices(it1({8, 0, -8}), it1({7, 1}), 0, false).entries == std::vector<int>{0, 2, 0, 0});
  // b_j = A_j - 1/2 interleaves -a at a definite place.
  CHECK(automorphic_split_indices(it1({8, 0, -8}), it1({7, -1}), 0, false).entries == std::vector<int>{0, 1, 1, 0});
  CHECK_THROWS_AS(automorphic_split_indices(it1({2, 0, -2}), it1({0}), 0, false), Error);
}

TEST_CASE("motivic split indices") {
  const HodgeType h = hodge_type_from_infinity_type(it1({3, -3}), 0, false);
  const HodgeType hp = hodge_type_from_infinity_type(it1({2}), 0, false);
  CHECK(motivic_split_indices(h, hp).entries == std::vector<int>{0, 1, 0});
  const HodgeType h3 = hodge_type_from_infinity_type(it1({8, 0, -8}), 0, false);
  const HodgeType h3p = hodge_type_from_infinity_type(it1({7, 1}), 0, false);
  CHECK(motivic_split_indices(h3, h3p).entries == std::vector<int>{0, 2, 0, 0});
  CHECK(motivic_split_indices(h3, HodgeType{0, {}}).entries == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("reflection and palindromes") {
  CHECK(reflection_check(it1({8, 0, -8}), it1({7, 1}), 0));
  const SplitVector sym = automorphic_split_indices(it1({9, -9}), it1({5, -5}), 0, false);
  CHECK(sym.is_palindromic());
  CHECK_THROWS_AS(reflection_check(it1({2, 0, -2}), it1({0}), 0), Error);
}

TEST_CASE("property: dictionary, reflection, sums and stability against brute force") {
  const auto corpus = generate_pair_corpus(23, 300);
  for (const auto& p : corpus) {
    const auto a = p.a.to_doubled(), b = p.b.to_doubled();
    for (std::size_t v = 0; v < p.a.places(); ++v) {
      const SplitVector u = automorphic_split_indices(p.a, p.b, v, false);
      const SplitVector br = automorphic_split_indices(p.a, p.b, v, true);
      CHECK(u.entries == oracle::split_unbarred(a[v], b[v]));
      CHECK(br.entries == oracle::split_barred(a[v], b[v]));
      CHECK(u.sum() == p.b.n);
      CHECK(automorphic_split_indices(p.b, p.a, v, false).sum() == p.a.n);
      for (bool barred : {false, true})
        CHECK(motivic_split_indices(hodge_type_from_infinity_type(p.a, v, barred),
                                    hodge_type_from_infinity_type(p.b, v, barred)) ==
              automorphic_split_indices(p.a, p.b, v, barred));
      CHECK(reflection_check(p.a, p.b, v));

      // Shifting every b_j by one step without crossing any -a_i keeps sp.
      InfinityType shifted = p.b;
      bool crosses = false;
      for (auto& y : shifted.a[v]) {
        const HalfInt z = y + HalfInt::from_int(1);
        for (auto x : p.a.at(v))
          if ((y < -x && !(z < -x)) || z == -x) crosses = true;
        y = z;
      }
      bool tie_elsewhere = false;
      for (std::size_t w = 0; w < p.a.places(); ++w)
        for (auto x : p.a.at(w))
          for (auto y : shifted.at(w))
            if (x + y == HalfInt{}) tie_elsewhere = true;
      if (!crosses && !tie_elsewhere) CHECK(automorphic_split_indices(p.a, shifted, v, false) == u);
    }
  }
}
