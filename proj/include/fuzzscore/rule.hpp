#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzscore/errors.hpp"
#include "fuzzscore/linguistic_variable.hpp"

namespace fuzzscore {

/// One antecedent term: a variable matched against a label, or against
/// anything (`*` in the DSL, label == nullopt).
struct RuleTerm {
  std::string variable;
  std::optional<std::string> label;

  bool isWildcard() const { return !label.has_value(); }
  friend bool operator==(const RuleTerm&, const RuleTerm&) = default;
};

/// IF <antecedent terms, AND-connected> THEN <output IS label> [WITH weight].
struct Rule {
  std::vector<RuleTerm> antecedent;
  std::string outputVariable;
  std::string outputLabel;
  double weight = 1.0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

enum class RuleSource { Generated, Parsed };

struct RuleBase {
  std::vector<Rule> rules;
  RuleSource source = RuleSource::Parsed;

  std::size_t size() const { return rules.size(); }

  /// Equality is over rule content; provenance is bookkeeping.
  friend bool operator==(const RuleBase& a, const RuleBase& b) { return a.rules == b.rules; }
};

/// Non-negative weights keyed by input-variable name, normalized to sum 1
/// before use. Insertion order is preserved for deterministic rendering.
class WeightProfile {
 public:
  WeightProfile() = default;
  WeightProfile(std::initializer_list<std::pair<std::string, double>> init);

  void set(const std::string& name, double weight);
  double at(const std::string& name) const;
  bool has(const std::string& name) const;
  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

  /// Weights aligned with `order`, normalized to sum 1.
  /// Throws ConfigError on a negative weight, a missing name, or an all-zero profile.
  Eigen::ArrayXd normalized(std::span<const std::string> order) const;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

/// Rule-base structural validation against declared variables.
/// Checks variable and label names, consequent variable identity, and
/// weight range. Throws ConfigError. A rule whose terms are all wildcards
/// is legal: it fires unconditionally at its weight (a default rule).
void validateRuleBase(const RuleBase& rb, std::span<const LinguisticVariable> inputs,
                      const LinguisticVariable& output);

}  // namespace fuzzscore
