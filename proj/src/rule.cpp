#include "fuzzscore/rule.hpp"

#include <set>

namespace fuzzscore {

WeightProfile::WeightProfile(std::initializer_list<std::pair<std::string, double>> init) {
  for (const auto& [name, weight] : init) set(name, weight);
}

void WeightProfile::set(const std::string& name, double weight) {
  for (auto& entry : entries_)
    if (entry.first == name) {
      entry.second = weight;
      return;
    }
  entries_.emplace_back(name, weight);
}

double WeightProfile::at(const std::string& name) const {
  for (const auto& entry : entries_)
    if (entry.first == name) return entry.second;
  throw ConfigError("no weight for variable \"" + name + "\"");
}

bool WeightProfile::has(const std::string& name) const {
  for (const auto& entry : entries_)
    if (entry.first == name) return true;
  return false;
}

Eigen::ArrayXd WeightProfile::normalized(std::span<const std::string> order) const {
  Eigen::ArrayXd w(static_cast<Eigen::Index>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double v = at(order[i]);
    if (v < 0.0)
      throw ConfigError("negative weight " + std::to_string(v) + " for \"" + order[i] + "\"");
    w[static_cast<Eigen::Index>(i)] = v;
  }
  const double total = w.sum();
  if (total <= 0.0) throw ConfigError("weight profile is all zero");
  return w / total;
}

void validateRuleBase(const RuleBase& rb, std::span<const LinguisticVariable> inputs,
                      const LinguisticVariable& output) {
  auto findInput = [&](const std::string& name) -> const LinguisticVariable* {
    for (const auto& var : inputs)
      if (var.name() == name) return &var;
    return nullptr;
  };

  for (std::size_t r = 0; r < rb.rules.size(); ++r) {
    const Rule& rule = rb.rules[r];
    const std::string where = "rule " + std::to_string(r + 1) + ": ";

    std::set<std::string> seen;
    for (const RuleTerm& term : rule.antecedent) {
      const LinguisticVariable* var = findInput(term.variable);
      if (var == nullptr)
        throw ConfigError(where + "unknown input variable \"" + term.variable + "\"");
      if (!seen.insert(term.variable).second)
        throw ConfigError(where + "variable \"" + term.variable + "\" appears twice");
      if (!term.isWildcard() && !var->labelIndex(*term.label))
        throw ConfigError(where + "unknown label \"" + *term.label + "\" for variable \"" +
                          term.variable + "\"");
    }
    if (rule.antecedent.empty())
      throw ConfigError(where + "antecedent is empty");

    if (rule.outputVariable != output.name())
      throw ConfigError(where + "consequent variable \"" + rule.outputVariable +
                        "\" is not the output \"" + output.name() + "\"");
    if (!output.labelIndex(rule.outputLabel))
      throw ConfigError(where + "unknown output label \"" + rule.outputLabel + "\"");
    if (!(rule.weight > 0.0 && rule.weight <= 1.0))
      throw ConfigError(where + "weight must lie in (0, 1]");
  }
}

}  // namespace fuzzscore
