#include <doctest.h>

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "periodcalc/corpus.hpp"
#include "periodcalc/critical_points.hpp"
#include "periodcalc/descent.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/replay.hpp"

using namespace periodcalc;

namespace {

HCParameter A1(std::vector<std::int64_t> row) { return HCParameter::from_doubled({row}, 0); }

bool only_constants_and_two_pi_i(const DerivationReport& r) {
  for (const auto& [s, e] : r.residual.terms())
    if (s.kind != SymbolKind::TwoPiI && s.kind != SymbolKind::ConstClass) return false;
  return true;
}

bool all_consistent(const DerivationReport& r) {
  if (!r.chain_consistent() || !r.tags_monotone()) return false;
  for (const auto& s : r.subreports)
    if (!all_consistent(*s)) return false;
  return true;
}

// Instances on which each auto-facto fault is tried.
std::vector<std::pair<HCParameter, int>> mutation_instances() {
  std::mt19937_64 rng(17);
  return {{A1({14, 0, -14}), 1},
          {random_regular_parameter(rng, 3, 2, 7), 1},
          {random_regular_parameter(rng, 4, 2, 8), 1},
          {random_regular_parameter(rng, 2, 2, 6), 0}};
}

}  // namespace

TEST_CASE("holomorphic base case closes for n = 2") {
  const auto r = replay_factorization(A1({13, -1}), 0);
  CHECK(r->verdict == Verdict::Closed);
  CHECK(r->residual_support().empty());
  CHECK(r->axioms_used.count("holomorphic-base"));
}

TEST_CASE("descended n = 3 instance at q = 1 closes through the induction") {
  const auto r = replay_factorization(A1({14, 0, -14}), 1);
  CHECK(r->verdict == Verdict::Closed);
  for (const char* ax : {"rs-value", "asai-value", "ggp-iinh", "twist-expansion", "q-xi", "induction-hypothesis"})
    CHECK(r->axioms_used.count(ax));
  CHECK(all_consistent(*r));
}

TEST_CASE("replay rejects bad parameters") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInstance;
  };
  CHECK(code([] { replay_factorization(A1({2, 0, -2}), 1); }) == ErrorCode::NotRegular);
  CHECK(code([] { replay_factorization(A1({14, 0, -14}), 2); }) == ErrorCode::IndexOutOfRange);
  ReplayOptions o;
  o.allow_irregular = true;
  CHECK(replay_factorization(A1({4, 0, -4}), 1, o)->closed());
}

TEST_CASE("replay closes on the full grid, each run under a second") {
  std::mt19937_64 rng(2024);
  ReplayOptions o;
  o.use_memo = false;
  for (int n = 2; n <= 6; ++n)
    for (std::size_t d = 1; d <= 3; ++d)
      for (int q = 0; q <= n - 2; ++q) {
        const HCParameter A = random_regular_parameter(rng, n, d, n + 4, q % d);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = replay_factorization(A, q, o);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        CAPTURE(n);
        CAPTURE(d);
        CAPTURE(q);
        CHECK(r->verdict == Verdict::Closed);
        CHECK(secs < 1.0);
        CHECK(all_consistent(*r));
      }
}

TEST_CASE("every auto-facto fault opens the residual somewhere") {
  const auto instances = mutation_instances();
  for (const auto& f : known_faults()) {
    if (f.theorem != "auto-facto") continue;
    CAPTURE(f.name);
    ReplayOptions o;
    o.fault = f.name;
    bool opened = false;
    for (const auto& [A, q] : instances) opened = opened || replay_factorization(A, q, o)->verdict == Verdict::Open;
    CHECK(opened);
  }
}

TEST_CASE("a corrupted split index leaves a P symbol in the residual") {
  ReplayOptions o;
  o.fault = "rs-value";
  const auto r = replay_factorization(A1({14, 0, -14}), 1, o);
  REQUIRE(r->verdict == Verdict::Open);
  bool names_p = false;
  for (const auto& [s, e] : r->residual.terms()) names_p = names_p || s.kind == SymbolKind::ArithLocal;
  CHECK(names_p);
}

TEST_CASE("main factorization closes for n = 2 and n = 4") {
  const auto r2 = verify_main_factorization(A1({13, -1}));
  CHECK(r2->verdict == Verdict::Closed);
  std::mt19937_64 rng(4);
  const auto r4 = verify_main_factorization(random_regular_parameter(rng, 4, 1, 8));
  CHECK(r4->verdict == Verdict::Closed);
  CHECK(all_consistent(*r4));
  // Depth of nested auto-facto replays: rank 4, then 3, then 2.
  std::function<int(const DerivationReport&)> depth = [&](const DerivationReport& r) {
    int best = 0;
    for (const auto& s : r.subreports) best = std::max(best, depth(*s));
    return (r.theorem == "auto-facto" ? 1 : 0) + best;
  };
  CHECK(depth(*r4) == 3);
}

TEST_CASE("every factorization fault opens the residual") {
  for (const auto& f : known_faults()) {
    if (f.theorem != "factorization") continue;
    CAPTURE(f.name);
    ReplayOptions o;
    o.fault = f.name;
    CHECK(verify_main_factorization(A1({14, 0, -14}), o)->verdict == Verdict::Open);
  }
}

TEST_CASE("switching off the archimedean constant axiom weakens the verdict") {
  ReplayOptions o;
  o.lvarch = false;
  const auto r = replay_factorization(A1({14, 0, -14}), 1, o);
  CHECK(r->verdict == Verdict::ClosedModuloIInf);
  CHECK(r->closed());
}

TEST_CASE("Deligne check on the small pair leaves only 2 pi i") {
  ReplayOptions o;
  o.allow_irregular = true;
  const auto a = InfinityType::from_doubled(2, {{3, -3}}), b = InfinityType::from_doubled(1, {{2}});
  const auto r = verify_main_conjecture(a, b, HalfInt::from_doubled(1), o);
  CHECK(r->verdict == Verdict::Closed);
  CHECK(only_constants_and_two_pi_i(*r));
  CHECK(r->residual.exponent(PeriodSymbol::two_pi_i()) != 0);
  for (const auto& f : known_faults()) {
    if (f.theorem != "deligne") continue;
    CAPTURE(f.name);
    ReplayOptions bad = o;
    bad.fault = f.name;
    CHECK(verify_main_conjecture(a, b, HalfInt::from_doubled(1), bad)->verdict == Verdict::Open);
  }
}

TEST_CASE("property: Deligne residual is 2 pi i and constants on random instances") {
  CorpusOptions co;
  co.max_n = 5;
  const auto corpus = generate_pair_corpus(31, 120, co);
  ReplayOptions o;
  o.allow_irregular = true;
  int checked = 0;
  for (const auto& p : corpus) {
    for (auto s0 : critical_set(p.a, p.b).members) {
      if ((static_cast<std::int64_t>(p.a.n) * p.b.n * s0.doubled()) % 2 != 0) continue;
      const auto r = verify_main_conjecture(p.a, p.b, s0, o);
      CHECK(r->verdict == Verdict::Closed);
      CHECK(only_constants_and_two_pi_i(*r));
      CHECK(all_consistent(*r));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("memoized sub-replays are shared and stable") {
  const auto first = replay_factorization(A1({14, 0, -14}), 1);
  const std::size_t size = replay_memo_size();
  const auto second = replay_factorization(A1({14, 0, -14}), 1);
  CHECK(first == second);
  CHECK(replay_memo_size() == size);
  ReplayOptions fresh;
  fresh.use_memo = false;
  CHECK(replay_factorization(A1({14, 0, -14}), 1, fresh)->to_json() == first->to_json());
}

TEST_CASE("fault registry") {
  std::set<std::string> names;
  for (const auto& f : known_faults()) names.insert(f.name);
  CHECK(names.size() == known_faults().size());
  CHECK(is_known_fault("rs-value"));
  CHECK_FALSE(is_known_fault("no-such-step"));
}
