#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzscore/construct.hpp"
#include "fuzzscore/csv.hpp"

namespace fuzzscore {

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;  // population form, over scored rows in input order
  double min = 0.0;
  double max = 0.0;
};

struct HistogramBin {
  int index = 0;  // bin covers [index * 0.1, (index + 1) * 0.1)
  long count = 0;
};

struct RowOutcome {
  std::string id;
  std::optional<EvaluationResult> result;
  std::string error;  // set when the row failed to score
};

/// Batch scoring outcome: one entry per accepted dataset row (input order),
/// summary statistics per score column, and the divergence histogram.
struct ScoreReport {
  std::vector<RowOutcome> rows;
  std::vector<std::pair<std::string, SummaryStats>> summary;
  std::vector<HistogramBin> divergenceHistogram;
  int rowsScored = 0;
  int rowsFailed = 0;
};

/// Score every dataset row. Under `strict` the first row failure throws;
/// otherwise failed rows are recorded and skipped in the summary.
ScoreReport scoreDataset(const ConstructConfig& config, const Dataset& ds,
                         bool imputeMissing = false, bool strict = false);

/// Nested JSON report with firing traces; numbers at full precision.
std::string reportToJson(const ScoreReport& report, const ConstructConfig& config,
                         const Dataset& ds);

/// Flat CSV of scores only, 6 decimal places. Failed rows are omitted.
std::string reportToCsv(const ScoreReport& report, const ConstructConfig& config);

}  // namespace fuzzscore
