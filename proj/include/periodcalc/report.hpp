#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "periodcalc/monomial.hpp"
#include "periodcalc/normalize.hpp"

namespace periodcalc {

using json = nlohmann::ordered_json;

// Rationality-field labels; union is the only operation.
class FieldTagSet {
 public:
  FieldTagSet() = default;
  FieldTagSet(std::initializer_list<std::string> tags) : tags_(tags) {}

  FieldTagSet& unite(const FieldTagSet& o) {
    tags_.insert(o.tags_.begin(), o.tags_.end());
    return *this;
  }
  bool contains(const FieldTagSet& o) const;
  const std::set<std::string>& labels() const { return tags_; }
  bool operator==(const FieldTagSet&) const = default;

 private:
  std::set<std::string> tags_;
};

enum class Verdict { Closed, ClosedModuloIInf, Open };
std::string verdict_name(Verdict v);

// Which residual symbols a verdict may ignore besides ConstClass.
struct AllowedClasses {
  bool two_pi_i = false;
  bool lvarch = true;  // archimedean ConstClass symbols count as constants
};

struct DerivationStep {
  std::string axiom;
  std::string note;
  bool normalization = false;
  Monomial factor;  // multiplied in; unit for a normalization step
  Monomial before;
  Monomial after;
  FieldTagSet tags;  // accumulated
  std::map<std::string, int> rules_fired;
};

struct DerivationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> params;
  Monomial goal;
  std::vector<DerivationStep> steps;
  Monomial residual;
  Verdict verdict = Verdict::Open;
  long long two_pi_i_exponent = 0;
  std::vector<std::string> notes;
  std::set<std::string> axioms_used;
  FieldTagSet tags;
  AllowedClasses allowed;
  std::vector<std::shared_ptr<const DerivationReport>> subreports;

  // Residual symbols outside ConstClass and the allowed classes.
  std::vector<std::string> residual_support() const;
  bool closed() const { return verdict != Verdict::Open; }

  // Steps chain (after_k == before_{k+1}), multiplicative steps satisfy
  // after == before * factor, and the last after equals the residual.
  bool chain_consistent() const;
  bool tags_monotone() const;

  json to_json() const;
  std::string to_text() const;
};

json monomial_to_json(const Monomial& m);
Verdict classify(const Monomial& residual, const AllowedClasses& allowed);

// Incrementally builds a report whose current monomial should reduce to a
// constant.
class Derivation {
 public:
  Derivation(std::string theorem, Monomial goal, const Normalizer& normalizer, AllowedClasses allowed);

  void param(const std::string& k, const std::string& v) { report_.params.emplace_back(k, v); }
  void note(const std::string& s) { report_.notes.push_back(s); }
  void use(const std::string& axiom) { report_.axioms_used.insert(axiom); }

  // current *= relation^e, where relation ~ 1.
  void apply(const std::string& axiom, const Monomial& relation, long long e, const FieldTagSet& tags,
             const std::string& note = {});
  void normalize(const std::string& note = {});
  void subreport(std::shared_ptr<const DerivationReport> r) { report_.subreports.push_back(std::move(r)); }

  const Monomial& current() const { return current_; }
  DerivationReport finish();

 private:
  DerivationReport report_;
  Monomial current_;
  FieldTagSet tags_;
  const Normalizer& normalizer_;
  AllowedClasses allowed_;
};

// Closed iff normalize(lhs / rhs) is supported on ConstClass and the allowed classes.
DerivationReport assert_equivalent(const Monomial& lhs, const Monomial& rhs, const AllowedClasses& allowed,
                                   const Normalizer& normalizer = Normalizer());

}  // namespace periodcalc
