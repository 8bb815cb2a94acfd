#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzscore/linguistic_variable.hpp"
#include "fuzzscore/operators.hpp"
#include "fuzzscore/rule.hpp"
#include "fuzzscore/sampled_set.hpp"

namespace fuzzscore {

/// Per-evaluation record: the firing strength of every rule (in rule-base
/// order, zeros included), the mass of the aggregated consequent set, and
/// the crisp defuzzified output.
struct FiringTrace {
  std::vector<double> strengths;
  double aggregateMass = 0.0;
  double crispOutput = 0.0;
};

struct InferResult {
  double output = 0.0;
  FiringTrace trace;
};

/// One Mamdani stage: input vocabulary, output vocabulary, a validated rule
/// base, operator choices and a sampling resolution. Immutable once built;
/// concurrent evaluation against a shared instance is safe.
class Fis {
 public:
  Fis(std::vector<LinguisticVariable> inputs, LinguisticVariable output, RuleBase rules,
      OperatorSet ops = {}, Eigen::Index resolution = 1001);

  const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
  const LinguisticVariable& output() const { return output_; }
  const RuleBase& rules() const { return rules_; }
  const OperatorSet& ops() const { return ops_; }
  Eigen::Index resolution() const { return resolution_; }

  const SampledFuzzySet& outputLabelSamples(Eigen::Index label) const {
    return labelSamples_[label];
  }

  /// Antecedent label index per input for one rule; -1 matches anything.
  const std::vector<int>& resolvedPattern(std::size_t rule) const { return patterns_[rule]; }
  int resolvedConsequent(std::size_t rule) const { return consequents_[rule]; }

 private:
  std::vector<LinguisticVariable> inputs_;
  LinguisticVariable output_;
  RuleBase rules_;
  OperatorSet ops_;
  Eigen::Index resolution_;

  std::vector<SampledFuzzySet> labelSamples_;
  std::vector<std::vector<int>> patterns_;
  std::vector<int> consequents_;
};

/// Run one Mamdani stage on a crisp input per declared variable.
/// Throws DataError on missing/extra/out-of-universe inputs and Error when
/// no rule fires (empty aggregate).
InferResult infer(const Fis& fis, const std::map<std::string, double>& crispInputs);

/// Affine output calibration: the centroids of the lowest and highest output
/// labels at full activation, the reachable extremes of the raw stage.
struct Calibration {
  double cMin = 0.0;
  double cMax = 0.0;

  friend bool operator==(const Calibration&, const Calibration&) = default;
};

/// Compute the calibration of a stage. Throws ConfigError when the output
/// partition is degenerate (cMin == cMax).
Calibration calibrate(const Fis& fis);

/// Map a raw centroid onto [lo, hi] so the calibrated extremes land exactly
/// on the universe endpoints; the result is clamped to [lo, hi].
double rescale(double x, const Calibration& cal, double lo, double hi);

}  // namespace fuzzscore
