#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzscore/membership.hpp"

namespace fuzzscore {

/// A named universe interval with an ordered list of labeled membership
/// functions. This is the vocabulary both fuzzification and defuzzification
/// work against.
///
/// Construction validates that every label's support lies inside the
/// universe and that the labels cover it (no x with all memberships zero).
class LinguisticVariable {
 public:
  using Label = std::pair<std::string, MembershipFunction>;

  LinguisticVariable(std::string name, double lo, double hi, std::vector<Label> labels);

  const std::string& name() const { return name_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  Eigen::Index labelCount() const { return static_cast<Eigen::Index>(labels_.size()); }
  const std::string& labelName(Eigen::Index i) const { return labels_[i].first; }
  const MembershipFunction& labelMf(Eigen::Index i) const { return labels_[i].second; }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<Eigen::Index> labelIndex(std::string_view label) const;

  bool contains(double x) const { return x >= lo_ && x <= hi_; }

 private:
  std::string name_;
  double lo_;
  double hi_;
  std::vector<Label> labels_;
};

/// Membership degree of x under every label, in label order.
/// Throws DataError when x lies outside the variable's universe.
Eigen::ArrayXd fuzzify(const LinguisticVariable& var, double x);

/// The failure / neutral / success partition over [lo, hi] with shouldered
/// extremes: failure peaks at lo, neutral at the midpoint, success at hi.
/// A Ruspini partition for any lo < hi.
LinguisticVariable successPartition(std::string name, double lo, double hi);

/// An output partition with one label per integer scale point lo..hi
/// (very_low ... very_high), each a unit triangle shouldered at the ends.
LinguisticVariable levelPartition(std::string name, double lo, double hi);

}  // namespace fuzzscore
