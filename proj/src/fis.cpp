#include "fuzzscore/fis.hpp"

#include <sstream>

namespace fuzzscore {

Fis::Fis(std::vector<LinguisticVariable> inputs, LinguisticVariable output, RuleBase rules,
         OperatorSet ops, Eigen::Index resolution)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      ops_(ops),
      resolution_(resolution) {
  if (resolution_ < 101 || resolution_ % 2 == 0)
    throw ConfigError("resolution must be odd and at least 101, got " +
                      std::to_string(resolution_));
  for (std::size_t i = 0; i < inputs_.size(); ++i)
    for (std::size_t j = i + 1; j < inputs_.size(); ++j)
      if (inputs_[i].name() == inputs_[j].name())
        throw ConfigError("duplicate input variable \"" + inputs_[i].name() + "\"");

  validateRuleBase(rules_, inputs_, output_);

  labelSamples_.reserve(output_.labelCount());
  for (Eigen::Index j = 0; j < output_.labelCount(); ++j)
    labelSamples_.push_back(
        SampledFuzzySet::sample(output_.labelMf(j), output_.lo(), output_.hi(), resolution_));

  patterns_.reserve(rules_.rules.size());
  consequents_.reserve(rules_.rules.size());
  for (const Rule& rule : rules_.rules) {
    std::vector<int> pattern(inputs_.size(), -1);
    for (const RuleTerm& term : rule.antecedent) {
      if (term.isWildcard()) continue;
      for (std::size_t i = 0; i < inputs_.size(); ++i)
        if (inputs_[i].name() == term.variable) {
          pattern[i] = static_cast<int>(*inputs_[i].labelIndex(*term.label));
          break;
        }
    }
    patterns_.push_back(std::move(pattern));
    consequents_.push_back(static_cast<int>(*output_.labelIndex(rule.outputLabel)));
  }
}

InferResult infer(const Fis& fis, const std::map<std::string, double>& crispInputs) {
  const auto& inputs = fis.inputs();

  if (crispInputs.size() != inputs.size()) {
    std::ostringstream msg;
    msg << "expected " << inputs.size() << " input values, got " << crispInputs.size();
    throw DataError(msg.str());
  }

  std::vector<Eigen::ArrayXd> memberships;
  memberships.reserve(inputs.size());
  for (const auto& var : inputs) {
    const auto it = crispInputs.find(var.name());
    if (it == crispInputs.end())
      throw DataError("missing input value for variable \"" + var.name() + "\"");
    memberships.push_back(fuzzify(var, it->second));
  }

  const auto& rules = fis.rules().rules;
  FiringTrace trace;
  trace.strengths.resize(rules.size(), 0.0);

  for (std::size_t r = 0; r < rules.size(); ++r) {
    const std::vector<int>& pattern = fis.resolvedPattern(r);
    double strength = 1.0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (pattern[i] < 0) continue;  // wildcard contributes nothing
      strength = applyAnd(fis.ops().andOp, strength, memberships[i][pattern[i]]);
      if (strength == 0.0) break;
    }
    trace.strengths[r] = rules[r].weight * strength;
  }

  const Eigen::Index nLabels = fis.output().labelCount();
  Eigen::ArrayXd agg = Eigen::ArrayXd::Zero(fis.resolution());
  bool anyFired = false;

  if (fis.ops().aggregation == Aggregation::Max) {
    // Same-label clips commute with max, so one clip per label suffices.
    Eigen::ArrayXd labelStrength = Eigen::ArrayXd::Zero(nLabels);
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const int label = fis.resolvedConsequent(r);
      if (trace.strengths[r] > labelStrength[label]) labelStrength[label] = trace.strengths[r];
    }
    for (Eigen::Index j = 0; j < nLabels; ++j) {
      if (labelStrength[j] <= 0.0) continue;
      anyFired = true;
      const Eigen::ArrayXd& mu = fis.outputLabelSamples(j).mu();
      if (fis.ops().implication == Implication::MinClip)
        agg = agg.max(mu.min(labelStrength[j]));
      else
        agg = agg.max(mu * labelStrength[j]);
    }
  } else {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (trace.strengths[r] <= 0.0) continue;
      anyFired = true;
      const Eigen::ArrayXd& mu = fis.outputLabelSamples(fis.resolvedConsequent(r)).mu();
      if (fis.ops().implication == Implication::MinClip)
        agg += mu.min(trace.strengths[r]);
      else
        agg += mu * trace.strengths[r];
    }
    agg = agg.min(1.0);
  }

  if (!anyFired) throw Error("empty aggregate; no rule fired");

  SampledFuzzySet aggregateSet(fis.output().lo(), fis.output().hi(), std::move(agg));
  trace.aggregateMass = mass(aggregateSet);
  trace.crispOutput = centroid(aggregateSet);
  return {trace.crispOutput, std::move(trace)};
}

Calibration calibrate(const Fis& fis) {
  const Eigen::Index last = fis.output().labelCount() - 1;
  Calibration cal;
  cal.cMin = centroid(fis.outputLabelSamples(0));
  cal.cMax = centroid(fis.outputLabelSamples(last));
  if (!(cal.cMin < cal.cMax))
    throw ConfigError("degenerate output partition: calibration range is empty");
  return cal;
}

double rescale(double x, const Calibration& cal, double lo, double hi) {
  const double scaled = lo + (hi - lo) * (x - cal.cMin) / (cal.cMax - cal.cMin);
  if (scaled < lo) return lo;
  if (scaled > hi) return hi;
  return scaled;
}

}  // namespace fuzzscore
