#include <doctest.h>

#include <string>

#include "periodcalc/descent.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/instance.hpp"

using namespace periodcalc;

namespace {

const std::string data_dir = PERIODCALC_TEST_DATA;

ErrorCode load_error(const std::string& text) {
  try {
    Instance::from_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("instance accepted: " << text);
  return ErrorCode::InvalidInstance;
}

}  // namespace

TEST_CASE("bundled instances load") {
  const Instance desc = Instance::load(data_dir + "/descended_n3_q1.json");
  CHECK(desc.n == 3);
  REQUIRE(desc.A);
  CHECK(desc.q == 1);
  const auto [a, b] = desc.pair_types();
  CHECK(a == pi_infinity_type(*desc.A));
  CHECK(b == pi_prime_infinity_type(*desc.A, 1));

  const Instance small = Instance::load(data_dir + "/pair_small.json");
  CHECK(small.pi_prime.has_value());
  CHECK(small.pair_types().second.n == 1);
  CHECK_NOTHROW(Instance::load(data_dir + "/pair_tie.json"));
  CHECK_NOTHROW(Instance::load(data_dir + "/n2_q0.json"));
}

TEST_CASE("schema violations are invalid instances") {
  CHECK(load_error("[1, 2]") == ErrorCode::InvalidInstance);
  CHECK(load_error("{not json") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"n": 2, "infinity_types_doubled": {"pi": [[3, -3]]}})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "colour": 1, "infinity_types_doubled": {"pi": [[3, -3]]}})") ==
        ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3, 1]]}})") ==
        ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3]]},
                       "highest_weights": {"pi": [{"iota": [0, 0]}]}})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3]]}, "q": 0})") ==
        ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 3, "n_prime": 1, "places": [{"label": "v", "v0": true}],
                       "hc_parameter_doubled": [[14, 0, -14]]})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3]]},
                       "options": {"lvarch": "yes"}})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3]]},
                       "options": {"regularity": 4}})") == ErrorCode::InvalidInstance);
  CHECK(load_error(R"({"d": 2, "n": 2, "places": [{"label": "a"}, {"label": "a"}],
                       "infinity_types_doubled": {"pi": [[3, -3], [3, -3]]}})") == ErrorCode::InvalidInstance);
}

TEST_CASE("default places mark the first as v0") {
  const Instance in = Instance::from_string(R"({"d": 2, "n": 3, "hc_parameter_doubled": [[14, 0, -14], [14, 0, -14]]})");
  REQUIRE(in.shape.v0);
  CHECK(*in.shape.v0 == 0);
}

TEST_CASE("domain errors pass through with their own codes") {
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[2, -2]]}})") ==
        ErrorCode::ParityMismatch);
  CHECK(load_error(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, 3]]}})") == ErrorCode::TiedEntries);
  CHECK(load_error(R"({"d": 1, "n": 0, "infinity_types_doubled": {"pi": [[]]}})") == ErrorCode::RankZero);
}

TEST_CASE("weights and infinity types describe the same representation") {
  const Instance w = Instance::from_string(R"({"d": 1, "n": 2, "highest_weights": {"pi": [{"iota": [1, -1]}]}})");
  const Instance t = Instance::from_string(R"({"d": 1, "n": 2, "infinity_types_doubled": {"pi": [[3, -3]]}})");
  CHECK(w.pi_type() == t.pi_type());
}

TEST_CASE("to_json round trips") {
  for (const char* f : {"descended_n3_q1.json", "n2_q0.json", "pair_small.json", "pair_tie.json"}) {
    CAPTURE(f);
    const Instance in = Instance::load(data_dir + "/" + f);
    const json j = in.to_json();
    CHECK(Instance::from_json(j).to_json() == j);
    CHECK(Instance::from_json(j).to_json().dump(2) == j.dump(2));
  }
  const Instance w = Instance::from_string(
      R"({"d": 1, "n": 2, "n_prime": 1, "highest_weights": {"pi": [{"iota": [1, -1], "iota_bar": [0, 0]}],
          "pi_prime": [{"iota": [0], "iota_bar": [0]}]}, "s0_doubled": 1, "options": {"lvarch": false}})");
  CHECK(Instance::from_json(w.to_json()).to_json() == w.to_json());
  CHECK_FALSE(w.options.lvarch);
}

TEST_CASE("exit code contract") {
  CHECK(exit_code_for(Verdict::Closed, true) == ExitCode::Ok);
  CHECK(exit_code_for(Verdict::ClosedModuloIInf, false) == ExitCode::Ok);
  CHECK(exit_code_for(Verdict::ClosedModuloIInf, true) == ExitCode::OpenResidual);
  CHECK(exit_code_for(Verdict::Open, false) == ExitCode::OpenResidual);
  CHECK(exit_code_for(ErrorCode::OpenResidual) == ExitCode::OpenResidual);
  CHECK(exit_code_for(ErrorCode::TieDetected) == ExitCode::InvalidInstance);
  CHECK(exit_code_for(ErrorCode::NotRegular) == ExitCode::InvalidInstance);
}
