#pragma once

#include <Eigen/Core>
#include <span>

#include "fuzzscore/errors.hpp"
#include "fuzzscore/membership.hpp"
#include "fuzzscore/operators.hpp"

namespace fuzzscore {

/// A fuzzy set discretized on a uniform grid over a closed interval.
/// Carrier for implication clipping, aggregation and defuzzification.
class SampledFuzzySet {
 public:
  SampledFuzzySet(double lo, double hi, Eigen::ArrayXd mu) : lo_(lo), hi_(hi), mu_(std::move(mu)) {
    if (!(lo_ < hi_)) throw ConfigError("sampled set requires lo < hi");
    if (mu_.size() < 2) throw ConfigError("sampled set requires at least 2 samples");
  }

  static SampledFuzzySet zeros(double lo, double hi, Eigen::Index resolution) {
    return {lo, hi, Eigen::ArrayXd::Zero(resolution)};
  }

  /// Sample a membership function on a uniform grid of `resolution` points.
  static SampledFuzzySet sample(const MembershipFunction& mf, double lo, double hi,
                                Eigen::Index resolution) {
    Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(resolution, lo, hi);
    Eigen::ArrayXd mu(resolution);
    for (Eigen::Index i = 0; i < resolution; ++i) mu[i] = mf(xs[i]);
    return {lo, hi, std::move(mu)};
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  Eigen::Index resolution() const { return mu_.size(); }
  double spacing() const { return (hi_ - lo_) / static_cast<double>(mu_.size() - 1); }
  const Eigen::ArrayXd& mu() const { return mu_; }
  Eigen::ArrayXd& mu() { return mu_; }

  /// The grid abscissae, lazily materialized.
  Eigen::ArrayXd grid() const { return Eigen::ArrayXd::LinSpaced(mu_.size(), lo_, hi_); }

  bool sameGrid(const SampledFuzzySet& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_ && mu_.size() == other.mu_.size();
  }

 private:
  double lo_;
  double hi_;
  Eigen::ArrayXd mu_;
};

/// Trapezoidal-rule integral of f over the set's grid.
inline double trapezoid(const SampledFuzzySet& s, const Eigen::ArrayXd& f) {
  const Eigen::Index n = f.size();
  return s.spacing() * (f.sum() - 0.5 * (f[0] + f[n - 1]));
}

/// Implication of a firing strength onto a consequent set: pointwise
/// min(mu, activation) for MinClip, mu * activation for ProductScale.
inline SampledFuzzySet clip(const SampledFuzzySet& s, double activation,
                            Implication implication = Implication::MinClip) {
  if (implication == Implication::MinClip)
    return {s.lo(), s.hi(), s.mu().min(activation)};
  return {s.lo(), s.hi(), s.mu() * activation};
}

/// Combine activated consequent sets: pointwise max, or clipped pointwise sum.
/// All sets must share the grid. Throws on an empty input.
inline SampledFuzzySet aggregate(std::span<const SampledFuzzySet> sets,
                                 Aggregation aggregation = Aggregation::Max) {
  if (sets.empty()) throw Error("no activated consequents");
  Eigen::ArrayXd acc = sets[0].mu();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (!sets[i].sameGrid(sets[0])) throw ConfigError("aggregate requires a shared grid");
    if (aggregation == Aggregation::Max)
      acc = acc.max(sets[i].mu());
    else
      acc += sets[i].mu();
  }
  if (aggregation == Aggregation::SumClipped) acc = acc.min(1.0);
  return {sets[0].lo(), sets[0].hi(), std::move(acc)};
}

/// Area under the set, by the trapezoidal rule.
inline double mass(const SampledFuzzySet& s) { return trapezoid(s, s.mu()); }

/// Center-of-gravity defuzzification over the sampled grid.
/// Throws when the set carries no mass (no rule fired upstream).
inline double centroid(const SampledFuzzySet& s) {
  const double m = mass(s);
  if (m <= 0.0) throw Error("empty aggregate; no rule fired");
  const double moment = trapezoid(s, s.grid() * s.mu());
  return moment / m;
}

}  // namespace fuzzscore
