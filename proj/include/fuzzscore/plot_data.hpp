#pragma once

#include <string>
#include <vector>

#include "fuzzscore/construct.hpp"

namespace fuzzscore {

/// Write the data behind membership and aggregation plots:
///   - one CSV per item variable (x plus one membership column per label),
///   - one CSV per dimension output variable and one for the overall output,
///   - per worked-example response, the aggregated output set of every stage.
/// The worked example answers the first dimension's items at lo+1, the
/// second's at hi-1 and the third's at the midpoint.
/// Returns the paths written (relative to outDir).
std::vector<std::string> emitPlotData(const ConstructConfig& config,
                                      const std::string& outDir);

}  // namespace fuzzscore
