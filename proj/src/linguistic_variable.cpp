#include "fuzzscore/linguistic_variable.hpp"

#include <sstream>

namespace fuzzscore {

namespace {

// Coverage check is a grid sweep; a hole smaller than the sweep step cannot
// occur with piecewise-linear labels whose supports are checked against the
// universe first, because a full gap would surface at an adjacent grid point.
constexpr Eigen::Index kCoverageSweep = 1001;

}  // namespace

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<Label> labels)
    : name_(std::move(name)), lo_(lo), hi_(hi), labels_(std::move(labels)) {
  if (!(lo_ < hi_))
    throw ConfigError("variable \"" + name_ + "\": universe requires lo < hi");
  if (labels_.empty())
    throw ConfigError("variable \"" + name_ + "\": needs at least one label");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& [label, mf] = labels_[i];
    if (mf.supportLo() < lo_ || mf.supportHi() > hi_)
      throw ConfigError("variable \"" + name_ + "\": label \"" + label +
                        "\" support exceeds the universe");
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[j].first == label)
        throw ConfigError("variable \"" + name_ + "\": duplicate label \"" + label + "\"");
  }
  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(kCoverageSweep, lo_, hi_);
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    bool covered = false;
    for (const auto& [label, mf] : labels_)
      if (mf(xs[i]) > 0.0) {
        covered = true;
        break;
      }
    if (!covered) {
      std::ostringstream msg;
      msg << "variable \"" << name_ << "\": labels do not cover the universe near x=" << xs[i];
      throw ConfigError(msg.str());
    }
  }
}

std::optional<Eigen::Index> LinguisticVariable::labelIndex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i].first == label) return static_cast<Eigen::Index>(i);
  return std::nullopt;
}

Eigen::ArrayXd fuzzify(const LinguisticVariable& var, double x) {
  if (!var.contains(x)) {
    std::ostringstream msg;
    msg << "value " << x << " outside universe [" << var.lo() << ", " << var.hi()
        << "] of variable \"" << var.name() << "\"";
    throw DataError(msg.str());
  }
  Eigen::ArrayXd out(var.labelCount());
  for (Eigen::Index i = 0; i < var.labelCount(); ++i) out[i] = var.labelMf(i)(x);
  return out;
}

LinguisticVariable successPartition(std::string name, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  std::vector<LinguisticVariable::Label> labels;
  labels.emplace_back("failure", MembershipFunction::triangular(lo, lo, mid));
  labels.emplace_back("neutral", MembershipFunction::triangular(lo, mid, hi));
  labels.emplace_back("success", MembershipFunction::triangular(mid, hi, hi));
  return {std::move(name), lo, hi, std::move(labels)};
}

namespace {

std::vector<std::string> levelNames(int count) {
  switch (count) {
    case 5:
      return {"very_low", "low", "medium", "high", "very_high"};
    case 7:
      return {"very_low", "low",  "medium_low", "medium",
              "medium_high", "high", "very_high"};
    default: {
      std::vector<std::string> names;
      names.reserve(count);
      for (int i = 1; i <= count; ++i) names.push_back("level_" + std::to_string(i));
      return names;
    }
  }
}

}  // namespace

LinguisticVariable levelPartition(std::string name, double lo, double hi) {
  const int count = static_cast<int>(hi - lo) + 1;
  if (count < 2 || lo + (count - 1) != hi)
    throw ConfigError("variable \"" + name +
                      "\": level partition requires an integer-spanned universe");
  const std::vector<std::string> names = levelNames(count);
  std::vector<LinguisticVariable::Label> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double center = lo + i;
    const double a = i == 0 ? lo : center - 1.0;
    const double c = i == count - 1 ? hi : center + 1.0;
    labels.emplace_back(names[i], MembershipFunction::triangular(a, center, c));
  }
  return {std::move(name), lo, hi, std::move(labels)};
}

}  // namespace fuzzscore
