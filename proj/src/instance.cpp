#include "periodcalc/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "periodcalc/descent.hpp"

namespace periodcalc {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInstance, what); }

using Rows = std::vector<std::vector<std::int64_t>>;

Rows read_rows(const json& j, const std::string& field, std::size_t d, int n) {
  if (!j.is_array()) invalid(field + " must be an array of per-place arrays");
  if (j.size() != d) invalid(field + " must have one row per place");
  Rows rows;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      invalid(field + " rows must have length " + std::to_string(n));
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) invalid(field + " entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

HighestWeight read_weight(const json& j, const std::string& field, std::size_t d, int n) {
  if (!j.is_array() || j.size() != d) invalid(field + " must have one entry per place");
  HighestWeight mu;
  mu.n = n;
  bool any_bar = false, all_bar = true;
  for (const auto& place : j) {
    if (!place.is_object() || !place.contains("iota")) invalid(field + " entries need an \"iota\" vector");
    mu.iota.push_back(read_rows(json::array({place["iota"]}), field + ".iota", 1, n).front());
    if (place.contains("iota_bar")) {
      mu.iota_bar.push_back(read_rows(json::array({place["iota_bar"]}), field + ".iota_bar", 1, n).front());
      any_bar = true;
    } else {
      mu.iota_bar.emplace_back(n, 0);
      all_bar = false;
    }
  }
  if (any_bar && !all_bar) invalid(field + ": iota_bar must be given at every place or at none");
  mu.iota_bar_synthetic = !any_bar;
  return mu;
}

json rows_json(const Rows& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

json weight_json(const HighestWeight& mu) {
  json out = json::array();
  for (std::size_t v = 0; v < mu.places(); ++v) {
    json p = json::object();
    p["iota"] = mu.iota[v];
    if (!mu.iota_bar_synthetic) p["iota_bar"] = mu.iota_bar[v];
    out.push_back(std::move(p));
  }
  return out;
}

Rows hc_rows(const HCParameter& A) {
  Rows rows;
  for (const auto& row : A.entries) {
    std::vector<std::int64_t> r;
    for (auto x : row) r.push_back(x.doubled());
    rows.push_back(std::move(r));
  }
  return rows;
}

int read_int(const json& j, const char* key) {
  if (!j[key].is_number_integer()) invalid(std::string(key) + " must be an integer");
  return j[key].get<int>();
}

Instance parse(const json& j) {
  if (!j.is_object()) invalid("instance must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const std::set<std::string> known = {"d", "n", "n_prime", "places", "infinity_types_doubled",
                                                "highest_weights", "hc_parameter_doubled", "q", "s0_doubled",
                                                "options"};
    if (!known.count(it.key())) invalid("unknown field \"" + it.key() + "\"");
  }
  if (!j.contains("d") || !j.contains("n")) invalid("fields d and n are required");
  Instance in;
  const int d = read_int(j, "d");
  if (d < 1) invalid("d must be at least 1");
  in.n = read_int(j, "n");
  if (in.n < 1) throw Error(ErrorCode::RankZero, "n must be at least 1");
  if (j.contains("n_prime")) {
    in.n_prime = read_int(j, "n_prime");
    if (*in.n_prime < 1) throw Error(ErrorCode::RankZero, "n_prime must be at least 1");
  }

  if (j.contains("places")) {
    const json& places = j["places"];
    if (!places.is_array() || places.size() != static_cast<std::size_t>(d))
      invalid("places must list d entries");
    for (std::size_t v = 0; v < places.size(); ++v) {
      const json& p = places[v];
      if (!p.is_object() || !p.contains("label") || !p["label"].is_string())
        invalid("every place needs a string label");
      in.shape.labels.push_back(p["label"].get<std::string>());
      if (p.contains("v0")) {
        if (!p["v0"].is_boolean()) invalid("v0 must be a boolean");
        if (p["v0"].get<bool>()) {
          if (in.shape.v0) invalid("at most one place may be marked v0");
          in.shape.v0 = v;
        }
      }
    }
  } else {
    in.shape = CMShape::standard(static_cast<std::size_t>(d));
  }
  in.shape.validate();
  const std::size_t dd = in.shape.d();

  const bool has_it = j.contains("infinity_types_doubled");
  const bool has_hw = j.contains("highest_weights");
  if (has_it && has_hw) invalid("give either infinity_types_doubled or highest_weights, not both");
  if (has_it || has_hw) {
    const json& src = has_it ? j["infinity_types_doubled"] : j["highest_weights"];
    const std::string field = has_it ? "infinity_types_doubled" : "highest_weights";
    if (!src.is_object()) invalid(field + " must be an object");
    for (auto it = src.begin(); it != src.end(); ++it)
      if (it.key() != "pi" && it.key() != "pi_prime") invalid(field + ": unknown key \"" + it.key() + "\"");
    if (src.contains("pi_prime") && !in.n_prime) invalid("pi_prime data needs n_prime");
    if (has_it) {
      if (src.contains("pi")) in.pi = InfinityType::from_doubled(in.n, read_rows(src["pi"], field + ".pi", dd, in.n));
      if (src.contains("pi_prime"))
        in.pi_prime =
            InfinityType::from_doubled(*in.n_prime, read_rows(src["pi_prime"], field + ".pi_prime", dd, *in.n_prime));
    } else {
      if (src.contains("pi")) {
        in.pi_weight = read_weight(src["pi"], field + ".pi", dd, in.n);
        in.pi = infinity_type_from_weight(*in.pi_weight);
      }
      if (src.contains("pi_prime")) {
        in.pi_prime_weight = read_weight(src["pi_prime"], field + ".pi_prime", dd, *in.n_prime);
        in.pi_prime = infinity_type_from_weight(*in.pi_prime_weight);
      }
    }
  }

  if (j.contains("hc_parameter_doubled")) {
    if (in.pi_prime) invalid("give either pi_prime data or hc_parameter_doubled, not both");
    if (!in.shape.v0) invalid("hc_parameter_doubled needs a place marked v0");
    in.A = HCParameter::from_doubled(read_rows(j["hc_parameter_doubled"], "hc_parameter_doubled", dd, in.n),
                                     *in.shape.v0);
    const InfinityType a = pi_infinity_type(*in.A);
    a.validate();
    if (in.pi && !(*in.pi == a)) invalid("pi data disagrees with hc_parameter_doubled");
    if (in.n_prime && *in.n_prime != in.n - 1) invalid("with hc_parameter_doubled, n_prime must be n - 1");
  }
  if (j.contains("q")) {
    in.q = read_int(j, "q");
    if (!in.A) invalid("q needs hc_parameter_doubled");
  }
  if (j.contains("s0_doubled")) {
    if (!j["s0_doubled"].is_number_integer()) invalid("s0_doubled must be an integer");
    in.s0 = HalfInt::from_doubled(j["s0_doubled"].get<std::int64_t>());
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) invalid("options must be an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string& k = it.key();
      if (k == "lvarch" || k == "allow_irregular") {
        if (!it.value().is_boolean()) invalid("options." + k + " must be a boolean");
        (k == "lvarch" ? in.options.lvarch : in.options.allow_irregular) = it.value().get<bool>();
      } else {
        invalid("unknown option \"" + k + "\"");
      }
    }
  }
  if (!in.pi && !in.A) invalid("instance needs pi data or hc_parameter_doubled");
  return in;
}

}  // namespace

Instance Instance::from_json(const json& j) {
  try {
    return parse(j);
  } catch (const json::exception& e) {
    invalid(e.what());
  }
}

Instance Instance::from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

Instance Instance::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) invalid("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_string(ss.str());
}

json Instance::to_json() const {
  json j = json::object();
  j["d"] = d();
  j["n"] = n;
  if (n_prime) j["n_prime"] = *n_prime;
  json places = json::array();
  for (std::size_t v = 0; v < shape.d(); ++v) {
    json p = json::object();
    p["label"] = shape.labels[v];
    if (shape.v0 && *shape.v0 == v) p["v0"] = true;
    places.push_back(std::move(p));
  }
  j["places"] = std::move(places);
  if (pi_weight || pi_prime_weight) {
    json hw = json::object();
    if (pi_weight) hw["pi"] = weight_json(*pi_weight);
    if (pi_prime_weight) hw["pi_prime"] = weight_json(*pi_prime_weight);
    j["highest_weights"] = std::move(hw);
  } else if ((pi && !A) || pi_prime) {
    json it = json::object();
    if (pi && !A) it["pi"] = rows_json(pi->to_doubled());
    if (pi_prime) it["pi_prime"] = rows_json(pi_prime->to_doubled());
    j["infinity_types_doubled"] = std::move(it);
  }
  if (A) j["hc_parameter_doubled"] = rows_json(hc_rows(*A));
  if (q) j["q"] = *q;
  if (s0) j["s0_doubled"] = s0->doubled();
  json o = json::object();
  o["lvarch"] = options.lvarch;
  o["allow_irregular"] = options.allow_irregular;
  j["options"] = std::move(o);
  return j;
}

InfinityType Instance::pi_type() const {
  if (pi) return *pi;
  return pi_infinity_type(*A);
}

std::pair<InfinityType, InfinityType> Instance::pair_types(std::optional<int> q_override) const {
  if (pi_prime) return {pi_type(), *pi_prime};
  if (A) {
    const std::optional<int> qq = q_override ? q_override : q;
    if (!qq) invalid("a pair built from hc_parameter_doubled needs q");
    return {pi_infinity_type(*A), pi_prime_infinity_type(*A, *qq)};
  }
  invalid("instance has no pi_prime data and no hc_parameter_doubled");
}

ExitCode exit_code_for(ErrorCode code) {
  return code == ErrorCode::OpenResidual ? ExitCode::OpenResidual : ExitCode::InvalidInstance;
}

ExitCode exit_code_for(Verdict v, bool lvarch) {
  switch (v) {
    case Verdict::Closed: return ExitCode::Ok;
    case Verdict::ClosedModuloIInf: return lvarch ? ExitCode::OpenResidual : ExitCode::Ok;
    case Verdict::Open: return ExitCode::OpenResidual;
  }
  return ExitCode::Internal;
}

}  // namespace periodcalc
