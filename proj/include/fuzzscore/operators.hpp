#pragma once

#include <string>
#include <string_view>

#include "fuzzscore/errors.hpp"

namespace fuzzscore {

enum class TNorm { Min, Product };
enum class SNorm { Max, ProbabilisticSum };
enum class Implication { MinClip, ProductScale };
enum class Aggregation { Max, SumClipped };

/// Operator choices for one Mamdani stage. Defaults are the classical
/// min / max / min-clip / max configuration.
struct OperatorSet {
  TNorm andOp = TNorm::Min;
  SNorm orOp = SNorm::Max;
  Implication implication = Implication::MinClip;
  Aggregation aggregation = Aggregation::Max;

  friend bool operator==(const OperatorSet&, const OperatorSet&) = default;
};

inline double applyAnd(TNorm op, double a, double b) {
  return op == TNorm::Min ? (a < b ? a : b) : a * b;
}

inline double applyOr(SNorm op, double a, double b) {
  return op == SNorm::Max ? (a > b ? a : b) : a + b - a * b;
}

// name <-> enum, used by the config file format

inline std::string toString(TNorm op) {
  return op == TNorm::Min ? "min" : "product";
}
inline std::string toString(SNorm op) {
  return op == SNorm::Max ? "max" : "probabilistic_sum";
}
inline std::string toString(Implication op) {
  return op == Implication::MinClip ? "min_clip" : "product_scale";
}
inline std::string toString(Aggregation op) {
  return op == Aggregation::Max ? "max" : "sum_clipped";
}

inline TNorm tnormFromString(std::string_view name) {
  if (name == "min") return TNorm::Min;
  if (name == "product") return TNorm::Product;
  throw ConfigError("unknown t-norm \"" + std::string(name) + "\" (expected min or product)");
}
inline SNorm snormFromString(std::string_view name) {
  if (name == "max") return SNorm::Max;
  if (name == "probabilistic_sum") return SNorm::ProbabilisticSum;
  throw ConfigError("unknown s-norm \"" + std::string(name) +
                    "\" (expected max or probabilistic_sum)");
}
inline Implication implicationFromString(std::string_view name) {
  if (name == "min_clip") return Implication::MinClip;
  if (name == "product_scale") return Implication::ProductScale;
  throw ConfigError("unknown implication \"" + std::string(name) +
                    "\" (expected min_clip or product_scale)");
}
inline Aggregation aggregationFromString(std::string_view name) {
  if (name == "max") return Aggregation::Max;
  if (name == "sum_clipped") return Aggregation::SumClipped;
  throw ConfigError("unknown aggregation \"" + std::string(name) +
                    "\" (expected max or sum_clipped)");
}

}  // namespace fuzzscore
