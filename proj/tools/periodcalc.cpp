// periodcalc: critical sets, split indices and period-relation replays.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "periodcalc/corpus.hpp"
#include "periodcalc/critical_points.hpp"
#include "periodcalc/descent.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/hodge_split.hpp"
#include "periodcalc/instance.hpp"
#include "periodcalc/replay.hpp"

using namespace periodcalc;

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* v = std::getenv("PERIODCALC_LOG");
  if (!v) return LogLevel::Quiet;
  const std::string s(v);
  if (s == "debug" || s == "2") return LogLevel::Debug;
  if (s == "info" || s == "1") return LogLevel::Info;
  return LogLevel::Quiet;
}

void log(LogLevel level, const std::string& msg) {
  static const LogLevel current = log_level();
  if (static_cast<int>(level) <= static_cast<int>(current) && level != LogLevel::Quiet)
    std::cerr << "[periodcalc] " << msg << "\n";
}

struct Args {
  std::string instance;
  std::string format = "json";
  std::optional<int> q;
  std::optional<std::int64_t> s0_doubled;
  bool no_lvarch = false;
  bool allow_irregular = false;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::string theorem = "auto-facto";
  std::optional<std::string> fault;
};

void emit(const Args& args, const json& j, const std::string& text) {
  if (args.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json halves(const std::vector<HalfInt>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x.doubled());
  return out;
}

ReplayOptions replay_options(const Args& args, const Instance& in) {
  ReplayOptions o;
  o.lvarch = in.options.lvarch && !args.no_lvarch;
  o.allow_irregular = in.options.allow_irregular || args.allow_irregular;
  o.fault = args.fault;
  return o;
}

int cmd_critical(const Args& args) {
  const Instance in = Instance::load(args.instance);
  const auto [a, b] = in.pair_types(args.q);
  if (!has_critical_points(a, b))
    throw Error(ErrorCode::NoCriticalPoints, "some a_{v,i} + b_{v,j} vanishes");
  const CriticalSet cs = critical_set(a, b);
  const HalfInt shift = motivic_shift(a.n, b.n);
  const std::vector<std::int64_t> motivic = motivic_critical_set(tensor_hodge_types(a, b));
  const bool dictionary = check_shift_dictionary(a, b);

  json j;
  j["command"] = "critical";
  j["n"] = a.n;
  j["n_prime"] = b.n;
  j["d"] = a.places();
  json c;
  c["anchor_doubled"] = cs.anchor.doubled();
  c["lower_doubled"] = cs.lower.doubled();
  c["upper_doubled"] = cs.upper.doubled();
  c["members_doubled"] = halves(cs.members);
  c["text"] = cs.str();
  j["critical_set"] = std::move(c);
  j["motivic_shift_doubled"] = shift.doubled();
  j["motivic_critical_set"] = motivic;
  j["shift_dictionary"] = dictionary;

  std::string text = "critical set: " + cs.str() + "\nmotivic shift: " + shift.str() + "\nmotivic critical set: {";
  for (std::size_t i = 0; i < motivic.size(); ++i) text += (i ? ", " : "") + std::to_string(motivic[i]);
  text += std::string("}\nshift dictionary: ") + (dictionary ? "holds" : "fails") + "\n";
  emit(args, j, text);
  return 0;
}

int cmd_split(const Args& args) {
  const Instance in = Instance::load(args.instance);
  const auto [a, b] = in.pair_types(args.q);
  json tables = json::array();
  std::string text;
  bool all_ok = true;
  for (std::size_t v = 0; v < a.places(); ++v) {
    for (bool barred : {false, true}) {
      const SplitVector sp = automorphic_split_indices(a, b, v, barred);
      const SplitVector sp_prime = automorphic_split_indices(b, a, v, barred);
      const SplitVector mot =
          motivic_split_indices(hodge_type_from_infinity_type(a, v, barred), hodge_type_from_infinity_type(b, v, barred));
      const bool dict = mot == sp;
      all_ok = all_ok && dict;
      json t;
      t["place"] = in.shape.labels.at(v);
      t["barred"] = barred;
      t["sp_pi"] = sp.entries;
      t["sp_pi_prime"] = sp_prime.entries;
      t["sp_motivic"] = mot.entries;
      t["dictionary"] = dict;
      tables.push_back(std::move(t));
      text += in.shape.labels.at(v) + (barred ? " (bar)" : "") + ": sp(Pi;Pi') = " + sp.str() +
              "  sp(Pi';Pi) = " + sp_prime.str() + "  motivic = " + mot.str() + (dict ? "" : "  MISMATCH") + "\n";
    }
  }
  json refl = json::array();
  for (std::size_t v = 0; v < a.places(); ++v) {
    const bool r = reflection_check(a, b, v);
    all_ok = all_ok && r;
    refl.push_back(r);
    text += "reflection at " + in.shape.labels.at(v) + ": " + (r ? "holds" : "fails") + "\n";
  }
  json j;
  j["command"] = "split";
  j["n"] = a.n;
  j["n_prime"] = b.n;
  j["tables"] = std::move(tables);
  j["reflection"] = std::move(refl);
  emit(args, j, text);
  return all_ok ? 0 : 3;
}

// Prints the residual support of every open report in the tree.
void print_open(const DerivationReport& r, const std::string& path) {
  if (r.verdict != Verdict::Open) return;
  const auto sup = r.residual_support();
  if (!sup.empty()) {
    std::cerr << "open residual in " << path << ":";
    for (const auto& s : sup) std::cerr << " " << s;
    std::cerr << "\n";
  }
  for (std::size_t k = 0; k < r.subreports.size(); ++k)
    print_open(*r.subreports[k], path + "/" + r.subreports[k]->theorem + "[" + std::to_string(k) + "]");
}

int report_exit(const DerivationReport& r, bool lvarch) {
  print_open(r, r.theorem);
  return static_cast<int>(exit_code_for(r.verdict, lvarch));
}

int emit_reports(const Args& args, const std::vector<std::shared_ptr<const DerivationReport>>& reports, bool lvarch) {
  int code = 0;
  for (const auto& r : reports) code = std::max(code, report_exit(*r, lvarch));
  if (reports.size() == 1) {
    emit(args, reports.front()->to_json(), reports.front()->to_text());
  } else {
    json arr = json::array();
    std::string text;
    for (const auto& r : reports) {
      arr.push_back(r->to_json());
      text += r->to_text() + "\n";
    }
    json j;
    j["reports"] = std::move(arr);
    emit(args, j, text);
  }
  return code;
}

int cmd_replay(const Args& args) {
  const Instance in = Instance::load(args.instance);
  const ReplayOptions opts = replay_options(args, in);
  if (opts.fault && !is_known_fault(*opts.fault))
    throw Error(ErrorCode::InvalidInstance, "unknown fault \"" + *opts.fault + "\"");
  std::vector<std::shared_ptr<const DerivationReport>> reports;
  log(LogLevel::Info, "replay " + args.theorem);

  if (args.theorem == "auto-facto" || args.theorem == "factorization") {
    if (!in.A) throw Error(ErrorCode::InvalidInstance, args.theorem + " needs hc_parameter_doubled");
    if (args.theorem == "factorization") {
      reports.push_back(verify_main_factorization(*in.A, opts));
    } else {
      const std::optional<int> q = args.q ? args.q : in.q;
      if (q) {
        reports.push_back(replay_factorization(*in.A, *q, opts));
      } else {
        for (int k = 0; k <= in.A->n - 2; ++k) reports.push_back(replay_factorization(*in.A, k, opts));
      }
    }
  } else if (args.theorem == "deligne") {
    const auto [a, b] = in.pair_types(args.q);
    std::optional<HalfInt> s0 = in.s0;
    if (args.s0_doubled) s0 = HalfInt::from_doubled(*args.s0_doubled);
    if (s0) {
      reports.push_back(verify_main_conjecture(a, b, *s0, opts));
    } else {
      for (HalfInt s : critical_set(a, b).members) {
        log(LogLevel::Debug, "deligne at s0 = " + s.str());
        reports.push_back(verify_main_conjecture(a, b, s, opts));
      }
      if (reports.empty()) throw Error(ErrorCode::NoCriticalPoints, "critical set is empty");
    }
  } else {
    throw Error(ErrorCode::InvalidInstance, "unknown theorem \"" + args.theorem + "\"");
  }
  return emit_reports(args, reports, opts.lvarch);
}

int cmd_corpus(const Args& args) {
  const auto corpus = generate_pair_corpus(args.seed, args.count);
  log(LogLevel::Info, "corpus of " + std::to_string(corpus.size()) + " instances");
  ReplayOptions opts;
  opts.allow_irregular = true;
  opts.lvarch = !args.no_lvarch;
  struct Row {
    bool dictionary = true, reflection = true, sums = true, shift = true, deligne = true;
    std::size_t critical = 0;
  };
  const auto rows = parallel_map(corpus, [&](const PairInstance& p) {
    Row r;
    for (std::size_t v = 0; v < p.a.places(); ++v) {
      for (bool barred : {false, true}) {
        const SplitVector sp = automorphic_split_indices(p.a, p.b, v, barred);
        const SplitVector spp = automorphic_split_indices(p.b, p.a, v, barred);
        r.dictionary = r.dictionary && sp == motivic_split_indices(hodge_type_from_infinity_type(p.a, v, barred),
                                                                   hodge_type_from_infinity_type(p.b, v, barred));
        r.sums = r.sums && sp.sum() == p.b.n && spp.sum() == p.a.n;
      }
      r.reflection = r.reflection && reflection_check(p.a, p.b, v);
    }
    r.shift = check_shift_dictionary(p.a, p.b);
    for (HalfInt s : critical_set(p.a, p.b).members) {
      ++r.critical;
      r.deligne = r.deligne && verify_main_conjecture(p.a, p.b, s, opts)->closed();
    }
    return r;
  });

  json arr = json::array();
  bool ok = true;
  std::string text;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const bool pass = r.dictionary && r.reflection && r.sums && r.shift && r.deligne;
    ok = ok && pass;
    json x;
    x["index"] = i;
    x["d"] = corpus[i].a.places();
    x["n"] = corpus[i].a.n;
    x["n_prime"] = corpus[i].b.n;
    x["pi_doubled"] = corpus[i].a.to_doubled();
    x["pi_prime_doubled"] = corpus[i].b.to_doubled();
    x["dictionary"] = r.dictionary;
    x["reflection"] = r.reflection;
    x["sum_rules"] = r.sums;
    x["shift_dictionary"] = r.shift;
    x["critical_points_checked"] = r.critical;
    x["deligne_closed"] = r.deligne;
    arr.push_back(std::move(x));
    if (!pass) text += "instance " + std::to_string(i) + ": FAIL\n";
  }
  text += "seed " + std::to_string(args.seed) + ", " + std::to_string(rows.size()) + " instances: " +
          (ok ? "all pass" : "failures") + "\n";
  json j;
  j["command"] = "corpus";
  j["seed"] = args.seed;
  j["count"] = rows.size();
  j["all_pass"] = ok;
  j["instances"] = std::move(arr);
  emit(args, j, text);
  return ok ? 0 : 3;
}

void add_common(CLI::App* sub, Args& args, bool needs_instance) {
  auto* opt = sub->add_option("--instance", args.instance, "Instance JSON file");
  if (needs_instance) opt->required()->check(CLI::ExistingFile);
  sub->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--q", args.q, "Coherent cohomology degree q");
  sub->add_option("--s0-doubled", args.s0_doubled, "Twice the evaluation point s0");
  sub->add_flag("--no-lvarch", args.no_lvarch, "Keep archimedean constants in the residual");
  sub->add_flag("--allow-irregular", args.allow_irregular, "Accept parameters below the regularity bounds");
  sub->add_option("--seed", args.seed, "Seed of the random corpus");
  sub->add_option("--inject-fault", args.fault, "Corrupt one named axiom or rule");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodcalc: exact period-relation calculus"};
  app.require_subcommand(1);
  Args args;

  auto* critical = app.add_subcommand("critical", "Critical set and shift dictionary of a pair");
  add_common(critical, args, true);
  auto* split = app.add_subcommand("split", "Split-index tables with dictionary and reflection checks");
  add_common(split, args, true);
  auto* replay = app.add_subcommand("replay", "Replay a factorization or Deligne-period derivation");
  add_common(replay, args, true);
  replay->add_option("--theorem", args.theorem, "Which statement to replay")
      ->check(CLI::IsMember({"auto-facto", "factorization", "deligne"}));
  auto* corpus = app.add_subcommand("corpus", "Run the seeded random corpus checks");
  add_common(corpus, args, false);
  corpus->add_option("--count", args.count, "Number of instances");
  auto* faults = app.add_subcommand("faults", "List fault names accepted by --inject-fault");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::InvalidInstance);
  }

  try {
    if (critical->parsed()) return cmd_critical(args);
    if (split->parsed()) return cmd_split(args);
    if (replay->parsed()) return cmd_replay(args);
    if (corpus->parsed()) return cmd_corpus(args);
    if (faults->parsed()) {
      for (const auto& f : known_faults()) std::cout << f.name << "\t" << f.theorem << "\t" << f.effect << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(exit_code_for(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Internal);
  }
  return static_cast<int>(ExitCode::Internal);
}
