#include "fuzzscore/rule_generator.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fuzzscore {

int roundHalfTowardMiddle(double value, double lo, double hi) {
  const double middle = 0.5 * (lo + hi);
  const double floorValue = std::floor(value);
  const double frac = value - floorValue;
  double rounded;
  if (std::abs(frac - 0.5) < 1e-9)
    rounded = value < middle ? floorValue + 1.0 : floorValue;
  else
    rounded = std::round(value);
  if (rounded < lo) rounded = lo;
  if (rounded > hi) rounded = hi;
  return static_cast<int>(rounded - lo) + 1;
}

namespace {

void requireSuccessPartition(const LinguisticVariable& var) {
  if (var.labelCount() != 3)
    throw ConfigError("generator input \"" + var.name() + "\" must have exactly 3 labels, has " +
                      std::to_string(var.labelCount()));
  const double mid = 0.5 * (var.lo() + var.hi());
  const double expected[3] = {var.lo(), mid, var.hi()};
  for (Eigen::Index i = 0; i < 3; ++i)
    if (var.labelMf(i).peak() != expected[i])
      throw ConfigError("generator input \"" + var.name() + "\": label \"" + var.labelName(i) +
                        "\" does not peak at the expected scale point");
}

void requireLevelPartition(const LinguisticVariable& var) {
  const auto count = static_cast<Eigen::Index>(var.hi() - var.lo()) + 1;
  if (var.labelCount() != count)
    throw ConfigError("generator output \"" + var.name() + "\" must have one label per scale" +
                      " point (" + std::to_string(count) + "), has " +
                      std::to_string(var.labelCount()));
  for (Eigen::Index i = 0; i < count; ++i)
    if (var.labelMf(i).peak() != var.lo() + static_cast<double>(i))
      throw ConfigError("generator output \"" + var.name() + "\": label \"" + var.labelName(i) +
                        "\" does not peak at the expected scale point");
}

}  // namespace

RuleBase generateRuleBase(std::span<const LinguisticVariable> inputs,
                          const WeightProfile& weights, const LinguisticVariable& output) {
  if (inputs.empty()) throw ConfigError("generator needs at least one input variable");
  for (const auto& var : inputs) requireSuccessPartition(var);
  requireLevelPartition(output);

  std::vector<std::string> names;
  names.reserve(inputs.size());
  for (const auto& var : inputs) names.push_back(var.name());
  const Eigen::ArrayXd w = weights.normalized(names);

  const std::size_t k = inputs.size();
  RuleBase rb;
  rb.source = RuleSource::Generated;
  rb.rules.reserve(static_cast<std::size_t>(std::pow(3.0, static_cast<double>(k))));

  std::vector<int> pattern(k, 0);  // label index per input, first input most significant
  while (true) {
    double mean = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double peak = inputs[i].labelMf(pattern[i]).peak();
      mean += w[static_cast<Eigen::Index>(i)] * peak;
    }
    const int level = roundHalfTowardMiddle(mean, output.lo(), output.hi());

    Rule rule;
    rule.antecedent.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      rule.antecedent.push_back({names[i], inputs[i].labelName(pattern[i])});
    rule.outputVariable = output.name();
    rule.outputLabel = output.labelName(level - 1);
    rule.weight = 1.0;
    rb.rules.push_back(std::move(rule));

    std::size_t digit = k;
    while (digit > 0) {
      if (++pattern[digit - 1] < 3) break;
      pattern[digit - 1] = 0;
      --digit;
    }
    if (digit == 0) break;
  }
  return rb;
}

}  // namespace fuzzscore
