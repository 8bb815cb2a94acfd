#include "fuzzscore/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fuzzscore/rule_generator.hpp"

namespace fuzzscore {

ScaleProfile scaleProfileFromString(std::string_view name) {
  if (name == "five_point") return ScaleProfile::FivePoint;
  if (name == "seven_point") return ScaleProfile::SevenPoint;
  throw ConfigError("unknown scale profile \"" + std::string(name) +
                    "\" (expected five_point or seven_point)");
}

std::string itemVariableName(int index) {
  if (index < 1 || index > kItemCount)
    throw ConfigError("item index " + std::to_string(index) + " outside 1.." +
                      std::to_string(kItemCount));
  std::ostringstream name;
  name << "item_" << (index < 10 ? "0" : "") << index;
  return name.str();
}

const std::array<std::string, 3>& dimensionNames() {
  static const std::array<std::string, 3> names = {
      "project_management_success", "project_impact_success", "stakeholder_satisfaction"};
  return names;
}

namespace {

const std::string kOverallVariable = "overall_success";

WeightProfile equalWeights(const std::vector<std::string>& names) {
  WeightProfile wp;
  for (const auto& name : names) wp.set(name, 1.0);
  return wp;
}

}  // namespace

ConstructConfig::ConstructConfig(ConstructDef def)
    : profile_(def.profile), resolution_(def.resolution), ops_(def.ops) {
  if (def.dimensions.size() != 3)
    throw ConfigError("a construct needs exactly 3 dimensions, got " +
                      std::to_string(def.dimensions.size()));

  // Canonical order regardless of definition order; all three must be present.
  std::vector<DimensionDef> ordered;
  for (const auto& name : dimensionNames()) {
    auto it = std::find_if(def.dimensions.begin(), def.dimensions.end(),
                           [&](const DimensionDef& d) { return d.name == name; });
    if (it == def.dimensions.end())
      throw ConfigError("missing dimension \"" + name + "\"");
    ordered.push_back(std::move(*it));
  }

  std::set<int> claimed;
  for (const auto& dim : ordered) {
    if (dim.itemIndices.size() < 2)
      throw ConfigError("dimension \"" + dim.name + "\" needs at least 2 items");
    for (int item : dim.itemIndices) {
      if (item < 1 || item > kItemCount)
        throw ConfigError("dimension \"" + dim.name + "\": item index " +
                          std::to_string(item) + " outside 1.." + std::to_string(kItemCount));
      if (!claimed.insert(item).second)
        throw ConfigError("item " + std::to_string(item) + " assigned to two dimensions");
    }
  }
  if (claimed.size() != kItemCount)
    throw ConfigError("dimensions must cover all " + std::to_string(kItemCount) + " items; " +
                      std::to_string(claimed.size()) + " covered");

  const double lo = scaleLo(profile_);
  const double hi = scaleHi(profile_);

  for (auto& dim : ordered) {
    std::vector<LinguisticVariable> inputs;
    std::vector<std::string> inputNames;
    inputs.reserve(dim.itemIndices.size());
    for (int item : dim.itemIndices) {
      inputNames.push_back(itemVariableName(item));
      inputs.push_back(successPartition(inputNames.back(), lo, hi));
    }
    LinguisticVariable output = levelPartition(dim.name, lo, hi);

    WeightProfile weights = dim.itemWeights ? *dim.itemWeights : equalWeights(inputNames);
    (void)weights.normalized(inputNames);  // weights must be valid even when rules are given
    RuleBase rules = dim.rules ? std::move(*dim.rules)
                               : generateRuleBase(inputs, weights, output);

    DimensionSpec spec{dim.name,
                       dim.itemIndices,
                       std::move(weights),
                       dim.ruleOrigin,
                       Fis(std::move(inputs), std::move(output), std::move(rules), ops_,
                           resolution_),
                       Calibration{}};
    spec.calibration = calibrate(spec.fis);
    for (int item : spec.itemIndices)
      itemToDimension_[item - 1] = dimensions_.size();
    dimensions_.push_back(std::move(spec));
  }

  std::vector<LinguisticVariable> topInputs;
  std::vector<std::string> topNames;
  for (const auto& name : dimensionNames()) {
    topNames.push_back(name);
    topInputs.push_back(successPartition(name, lo, hi));
  }
  LinguisticVariable topOutput = levelPartition(kOverallVariable, lo, hi);

  dimensionWeights_ = def.dimensionWeights
                          ? *def.dimensionWeights
                          : WeightProfile{{topNames[0], 0.2}, {topNames[1], 0.5},
                                          {topNames[2], 0.3}};
  (void)dimensionWeights_.normalized(topNames);
  topRuleOrigin_ = def.topRuleOrigin;
  RuleBase topRules = def.topRules
                          ? std::move(*def.topRules)
                          : generateRuleBase(topInputs, dimensionWeights_, topOutput);
  top_.emplace(std::move(topInputs), std::move(topOutput), std::move(topRules), ops_,
               resolution_);
  topCalibration_ = calibrate(*top_);
}

std::size_t ConstructConfig::dimensionOfItem(int item) const {
  if (item < 1 || item > kItemCount)
    throw ConfigError("item index " + std::to_string(item) + " outside 1.." +
                      std::to_string(kItemCount));
  return itemToDimension_[item - 1];
}

bool operator==(const ConstructConfig& a, const ConstructConfig& b) {
  if (a.profile_ != b.profile_ || a.resolution_ != b.resolution_ || !(a.ops_ == b.ops_) ||
      !(a.dimensionWeights_ == b.dimensionWeights_) || !(a.topRuleOrigin_ == b.topRuleOrigin_))
    return false;
  if (!(a.top_->rules() == b.top_->rules())) return false;
  if (a.top_->rules().source != b.top_->rules().source) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    const DimensionSpec& da = a.dimensions_[i];
    const DimensionSpec& db = b.dimensions_[i];
    if (da.name != db.name || da.itemIndices != db.itemIndices ||
        !(da.itemWeights == db.itemWeights) || !(da.ruleOrigin == db.ruleOrigin) ||
        !(da.fis.rules() == db.fis.rules()) ||
        da.fis.rules().source != db.fis.rules().source)
      return false;
  }
  return true;
}

ConstructConfig defaultConstruct(ScaleProfile profile) {
  ConstructDef def;
  def.profile = profile;
  def.dimensions.push_back({dimensionNames()[0], {1, 2, 3, 4, 5}, std::nullopt, {}, std::nullopt});
  def.dimensions.push_back({dimensionNames()[1], {6, 7, 8, 9, 10}, std::nullopt, {}, std::nullopt});
  def.dimensions.push_back({dimensionNames()[2], {11, 12, 13, 14}, std::nullopt, {}, std::nullopt});
  return ConstructConfig(std::move(def));
}

namespace {

int requireItem(const LikertResponse& r, int item, ScaleProfile profile) {
  const std::optional<int>& value = r.items[item - 1];
  if (!value)
    throw DataError("response \"" + r.id + "\": " + itemVariableName(item) +
                    " is missing (enable neutral imputation or complete the data)");
  const int hi = static_cast<int>(scaleHi(profile));
  if (*value < 1 || *value > hi)
    throw DataError("response \"" + r.id + "\": " + itemVariableName(item) + " value " +
                    std::to_string(*value) + " out of range 1.." + std::to_string(hi));
  return *value;
}

}  // namespace

EvaluationResult evaluate(const ConstructConfig& config, const LikertResponse& r) {
  EvaluationResult result;
  result.dimensionScores.reserve(3);
  result.dimensionTraces.reserve(3);

  std::map<std::string, double> topInputs;
  for (const DimensionSpec& dim : config.dimensions()) {
    std::map<std::string, double> crisp;
    for (int item : dim.itemIndices)
      crisp[itemVariableName(item)] =
          static_cast<double>(requireItem(r, item, config.profile()));
    InferResult stage = infer(dim.fis, crisp);
    const double score = rescale(stage.output, dim.calibration, config.lo(), config.hi());
    result.dimensionScores.push_back(score);
    result.dimensionTraces.push_back(std::move(stage.trace));
    topInputs[dim.name] = score;
  }

  InferResult topStage = infer(config.top(), topInputs);
  result.overall =
      rescale(topStage.output, config.topCalibration(), config.lo(), config.hi());
  result.topTrace = std::move(topStage.trace);

  result.baselineMean = baselineMean(r);
  result.divergence = result.overall - result.baselineMean;
  return result;
}

LikertResponse imputeNeutral(const LikertResponse& r, ScaleProfile profile) {
  LikertResponse out = r;
  for (auto& item : out.items)
    if (!item) item = scaleMidpoint(profile);
  return out;
}

double baselineMean(const LikertResponse& r) {
  double sum = 0.0;
  for (int i = 1; i <= kItemCount; ++i) {
    const std::optional<int>& value = r.items[i - 1];
    if (!value)
      throw DataError("response \"" + r.id + "\": baseline mean undefined, " +
                      itemVariableName(i) + " is missing");
    sum += static_cast<double>(*value);
  }
  return sum / kItemCount;
}

}  // namespace fuzzscore
