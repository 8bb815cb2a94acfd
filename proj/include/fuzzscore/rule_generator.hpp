#pragma once

#include <span>

#include "fuzzscore/rule.hpp"

namespace fuzzscore {

/// Deterministic complete rule base over the full antecedent cross-product.
///
/// Every input must carry the three-label success partition (peaks at lo,
/// mid, hi); the output must be a level partition with one label per integer
/// scale point. For each of the 3^k antecedent patterns the consequent is
/// the weighted mean of the antecedent peak values, rounded half toward the
/// middle level; all generated rules have weight 1.
RuleBase generateRuleBase(std::span<const LinguisticVariable> inputs,
                          const WeightProfile& weights, const LinguisticVariable& output);

/// Half-toward-the-middle rounding of a scale value onto 1-based level
/// indices lo..hi. Exposed for property tests.
int roundHalfTowardMiddle(double value, double lo, double hi);

}  // namespace fuzzscore
