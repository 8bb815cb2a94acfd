#include "fuzzscore/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "fuzzscore/rule_parser.hpp"

namespace fuzzscore {

namespace {

using OrderedJson = nlohmann::ordered_json;

SummaryStats summarize(const std::vector<double>& values) {
  SummaryStats s;
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

int divergenceBin(double divergence) {
  return static_cast<int>(std::floor(divergence * 10.0));
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

OrderedJson traceJson(const FiringTrace& trace, const Fis& fis, double rescaled) {
  OrderedJson fired = OrderedJson::array();
  for (std::size_t r = 0; r < trace.strengths.size(); ++r) {
    if (trace.strengths[r] <= 0.0) continue;
    RuleBase one;
    one.rules.push_back(fis.rules().rules[r]);
    std::string text = renderRules(one);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    fired.push_back({{"rule", text}, {"strength", trace.strengths[r]}});
  }
  return {{"fired", std::move(fired)},
          {"aggregate_mass", trace.aggregateMass},
          {"raw_centroid", trace.crispOutput},
          {"rescaled", rescaled}};
}

}  // namespace

ScoreReport scoreDataset(const ConstructConfig& config, const Dataset& ds, bool imputeMissing,
                         bool strict) {
  ScoreReport report;
  report.rows.reserve(ds.rows.size());

  for (const LikertResponse& row : ds.rows) {
    RowOutcome outcome;
    outcome.id = row.id;
    try {
      const LikertResponse scored =
          imputeMissing ? imputeNeutral(row, config.profile()) : row;
      outcome.result = evaluate(config, scored);
      ++report.rowsScored;
    } catch (const Error& e) {
      if (strict) throw;
      outcome.error = e.what();
      ++report.rowsFailed;
    }
    report.rows.push_back(std::move(outcome));
  }

  std::vector<std::vector<double>> dimensionValues(config.dimensions().size());
  std::vector<double> overallValues;
  std::vector<double> baselineValues;
  std::map<int, long> bins;
  for (const RowOutcome& outcome : report.rows) {
    if (!outcome.result) continue;
    const EvaluationResult& r = *outcome.result;
    for (std::size_t d = 0; d < dimensionValues.size(); ++d)
      dimensionValues[d].push_back(r.dimensionScores[d]);
    overallValues.push_back(r.overall);
    baselineValues.push_back(r.baselineMean);
    ++bins[divergenceBin(r.divergence)];
  }

  for (std::size_t d = 0; d < config.dimensions().size(); ++d)
    report.summary.emplace_back(config.dimensions()[d].name, summarize(dimensionValues[d]));
  report.summary.emplace_back("overall", summarize(overallValues));
  report.summary.emplace_back("baseline_mean", summarize(baselineValues));
  for (const auto& [index, count] : bins) report.divergenceHistogram.push_back({index, count});
  return report;
}

std::string reportToJson(const ScoreReport& report, const ConstructConfig& config,
                         const Dataset& ds) {
  OrderedJson doc;
  doc["meta"] = {{"tool", "fuzzscore"},
                 {"format_version", 1},
                 {"scale", toString(config.profile())},
                 {"input", ds.sourcePath},
                 {"rows_accepted", static_cast<int>(ds.rows.size())},
                 {"rows_rejected_at_load", ds.rejectedRows},
                 {"rows_scored", report.rowsScored},
                 {"rows_failed", report.rowsFailed}};

  OrderedJson summary;
  for (const auto& [name, stats] : report.summary)
    summary[name] = {{"mean", stats.mean},
                     {"stddev", stats.stddev},
                     {"min", stats.min},
                     {"max", stats.max}};
  doc["summary"] = std::move(summary);

  OrderedJson histogram = OrderedJson::array();
  for (const HistogramBin& bin : report.divergenceHistogram)
    histogram.push_back({{"lo", bin.index / 10.0},
                         {"hi", (bin.index + 1) / 10.0},
                         {"count", bin.count}});
  doc["divergence_histogram"] = std::move(histogram);

  OrderedJson rows = OrderedJson::array();
  for (const RowOutcome& outcome : report.rows) {
    OrderedJson row;
    row["id"] = outcome.id;
    if (!outcome.result) {
      row["error"] = outcome.error;
      rows.push_back(std::move(row));
      continue;
    }
    const EvaluationResult& r = *outcome.result;
    OrderedJson dims;
    for (std::size_t d = 0; d < config.dimensions().size(); ++d)
      dims[config.dimensions()[d].name] = r.dimensionScores[d];
    row["dimensions"] = std::move(dims);
    row["overall"] = r.overall;
    row["baseline_mean"] = r.baselineMean;
    row["divergence"] = r.divergence;

    OrderedJson traces;
    for (std::size_t d = 0; d < config.dimensions().size(); ++d) {
      const DimensionSpec& dim = config.dimensions()[d];
      traces[dim.name] = traceJson(r.dimensionTraces[d], dim.fis, r.dimensionScores[d]);
    }
    traces["overall"] = traceJson(r.topTrace, config.top(), r.overall);
    row["traces"] = std::move(traces);
    rows.push_back(std::move(row));
  }
  doc["results"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string reportToCsv(const ScoreReport& report, const ConstructConfig& config) {
  std::ostringstream out;
  out << "id";
  for (const DimensionSpec& dim : config.dimensions()) out << ',' << dim.name;
  out << ",overall,baseline_mean,divergence\n";
  out.setf(std::ios::fixed);
  out.precision(6);
  for (const RowOutcome& outcome : report.rows) {
    if (!outcome.result) continue;
    const EvaluationResult& r = *outcome.result;
    out << csvField(outcome.id);
    for (double score : r.dimensionScores) out << ',' << score;
    out << ',' << r.overall << ',' << r.baselineMean << ',' << r.divergence << '\n';
  }
  return out.str();
}

}  // namespace fuzzscore
