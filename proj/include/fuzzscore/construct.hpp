#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuzzscore/fis.hpp"

namespace fuzzscore {

enum class ScaleProfile { FivePoint, SevenPoint };

inline double scaleLo(ScaleProfile) { return 1.0; }
inline double scaleHi(ScaleProfile p) { return p == ScaleProfile::FivePoint ? 5.0 : 7.0; }
inline int scaleMidpoint(ScaleProfile p) { return p == ScaleProfile::FivePoint ? 3 : 4; }

inline std::string toString(ScaleProfile p) {
  return p == ScaleProfile::FivePoint ? "five_point" : "seven_point";
}
ScaleProfile scaleProfileFromString(std::string_view name);

/// Number of survey items in the construct.
inline constexpr int kItemCount = 14;

/// Column / variable name of a 1-based item index: item_01 .. item_14.
std::string itemVariableName(int index);

/// One respondent's answers. Items are 1-based externally; a nullopt item is
/// missing (blank cell in the CSV).
struct LikertResponse {
  std::string id;
  std::array<std::optional<int>, kItemCount> items;

  friend bool operator==(const LikertResponse&, const LikertResponse&) = default;
};

/// The canonical dimension names, in construct order.
const std::array<std::string, 3>& dimensionNames();

/// Where a stage's rule base came from; drives config-file round-tripping.
struct RuleOrigin {
  enum class Kind { Generated, Inline, File };
  Kind kind = Kind::Generated;
  std::string path;  // only for Kind::File

  friend bool operator==(const RuleOrigin&, const RuleOrigin&) = default;
};

/// A level-1 stage: which items feed it, their weights, and the stage itself.
struct DimensionSpec {
  std::string name;
  std::vector<int> itemIndices;  // 1-based, disjoint across dimensions
  WeightProfile itemWeights;
  RuleOrigin ruleOrigin;
  Fis fis;
  Calibration calibration;
};

/// Pre-build description of one dimension, as read from a config file.
struct DimensionDef {
  std::string name;
  std::vector<int> itemIndices;
  std::optional<WeightProfile> itemWeights;  // default: equal
  RuleOrigin ruleOrigin;
  std::optional<RuleBase> rules;  // nullopt => generated
};

/// Pre-build description of a whole construct.
struct ConstructDef {
  ScaleProfile profile = ScaleProfile::FivePoint;
  Eigen::Index resolution = 1001;
  OperatorSet ops;
  std::vector<DimensionDef> dimensions;
  std::optional<WeightProfile> dimensionWeights;  // default: 0.2 / 0.5 / 0.3
  RuleOrigin topRuleOrigin;
  std::optional<RuleBase> topRules;
};

/// The assembled two-level construct: three calibrated dimension stages and
/// the calibrated top stage combining them. Immutable after construction.
class ConstructConfig {
 public:
  explicit ConstructConfig(ConstructDef def);

  ScaleProfile profile() const { return profile_; }
  double lo() const { return scaleLo(profile_); }
  double hi() const { return scaleHi(profile_); }
  Eigen::Index resolution() const { return resolution_; }
  const OperatorSet& ops() const { return ops_; }

  const std::vector<DimensionSpec>& dimensions() const { return dimensions_; }
  const WeightProfile& dimensionWeights() const { return dimensionWeights_; }
  const Fis& top() const { return *top_; }
  const Calibration& topCalibration() const { return topCalibration_; }
  const RuleOrigin& topRuleOrigin() const { return topRuleOrigin_; }

  /// Index into dimensions() of the dimension owning a 1-based item.
  std::size_t dimensionOfItem(int item) const;

  /// Semantic equality: everything a config file captures.
  friend bool operator==(const ConstructConfig& a, const ConstructConfig& b);

 private:
  ScaleProfile profile_;
  Eigen::Index resolution_;
  OperatorSet ops_;
  std::vector<DimensionSpec> dimensions_;
  WeightProfile dimensionWeights_;
  RuleOrigin topRuleOrigin_;
  std::optional<Fis> top_;
  Calibration topCalibration_;
  std::array<std::size_t, kItemCount> itemToDimension_{};
};

/// The stock construct: items 1-5 project management, 6-10 project impact,
/// 11-14 stakeholder satisfaction; equal item weights; dimension weights
/// 0.2 / 0.5 / 0.3 with impact heaviest; generated rule bases; calibrated.
ConstructConfig defaultConstruct(ScaleProfile profile = ScaleProfile::FivePoint);

struct EvaluationResult {
  std::vector<double> dimensionScores;  // aligned with ConstructConfig::dimensions()
  double overall = 0.0;
  double baselineMean = 0.0;
  double divergence = 0.0;  // overall - baselineMean
  std::vector<FiringTrace> dimensionTraces;
  FiringTrace topTrace;
};

/// Score one response through both levels. Throws DataError on missing or
/// out-of-scale items.
EvaluationResult evaluate(const ConstructConfig& config, const LikertResponse& r);

/// Replace missing items with the scale midpoint.
LikertResponse imputeNeutral(const LikertResponse& r, ScaleProfile profile);

/// Arithmetic mean of all items, the classical comparator.
/// Throws DataError on a missing item.
double baselineMean(const LikertResponse& r);

}  // namespace fuzzscore
