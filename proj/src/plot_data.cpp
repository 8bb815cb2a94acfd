#include "fuzzscore/plot_data.hpp"

#include <filesystem>
#include <fstream>

#include "fuzzscore/rule_parser.hpp"

namespace fuzzscore {

namespace {

namespace fs = std::filesystem;

void writeVariableCsv(const fs::path& path, const LinguisticVariable& var,
                      Eigen::Index resolution) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "x";
  for (Eigen::Index j = 0; j < var.labelCount(); ++j) out << ',' << var.labelName(j);
  out << '\n';
  const Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(resolution, var.lo(), var.hi());
  for (Eigen::Index i = 0; i < resolution; ++i) {
    out << formatDouble(xs[i]);
    for (Eigen::Index j = 0; j < var.labelCount(); ++j)
      out << ',' << formatDouble(var.labelMf(j)(xs[i]));
    out << '\n';
  }
}

// The aggregate is rebuilt from the trace strengths to keep this a pure
// serialization concern.
void writeAggregateCsv(const fs::path& path, const Fis& fis, const FiringTrace& trace) {
  Eigen::ArrayXd agg = Eigen::ArrayXd::Zero(fis.resolution());
  for (std::size_t r = 0; r < trace.strengths.size(); ++r) {
    if (trace.strengths[r] <= 0.0) continue;
    const Eigen::ArrayXd& mu = fis.outputLabelSamples(fis.resolvedConsequent(r)).mu();
    Eigen::ArrayXd clipped = fis.ops().implication == Implication::MinClip
                                 ? mu.min(trace.strengths[r]).eval()
                                 : (mu * trace.strengths[r]).eval();
    if (fis.ops().aggregation == Aggregation::Max)
      agg = agg.max(clipped);
    else
      agg += clipped;
  }
  if (fis.ops().aggregation == Aggregation::SumClipped) agg = agg.min(1.0);

  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "x,mu\n";
  const Eigen::ArrayXd xs =
      Eigen::ArrayXd::LinSpaced(fis.resolution(), fis.output().lo(), fis.output().hi());
  for (Eigen::Index i = 0; i < fis.resolution(); ++i)
    out << formatDouble(xs[i]) << ',' << formatDouble(agg[i]) << '\n';
}

}  // namespace

std::vector<std::string> emitPlotData(const ConstructConfig& config, const std::string& outDir) {
  const fs::path dir(outDir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw DataError("cannot create output directory " + dir.string());

  std::vector<std::string> written;
  auto record = [&](const fs::path& p) { written.push_back(p.filename().string()); };

  for (const DimensionSpec& dim : config.dimensions())
    for (const LinguisticVariable& var : dim.fis.inputs()) {
      const fs::path p = dir / (var.name() + ".csv");
      writeVariableCsv(p, var, config.resolution());
      record(p);
    }
  for (const DimensionSpec& dim : config.dimensions()) {
    const fs::path p = dir / (dim.fis.output().name() + ".csv");
    writeVariableCsv(p, dim.fis.output(), config.resolution());
    record(p);
  }
  {
    const fs::path p = dir / (config.top().output().name() + ".csv");
    writeVariableCsv(p, config.top().output(), config.resolution());
    record(p);
  }

  // Worked example: lo+1 / hi-1 / midpoint across the three dimensions.
  LikertResponse example;
  example.id = "worked_example";
  const int values[3] = {static_cast<int>(config.lo()) + 1, static_cast<int>(config.hi()) - 1,
                         scaleMidpoint(config.profile())};
  for (std::size_t d = 0; d < config.dimensions().size(); ++d)
    for (int item : config.dimensions()[d].itemIndices) example.items[item - 1] = values[d];

  const EvaluationResult result = evaluate(config, example);
  for (std::size_t d = 0; d < config.dimensions().size(); ++d) {
    const DimensionSpec& dim = config.dimensions()[d];
    const fs::path p = dir / ("worked_example_" + dim.name + ".csv");
    writeAggregateCsv(p, dim.fis, result.dimensionTraces[d]);
    record(p);
  }
  const fs::path p = dir / "worked_example_overall.csv";
  writeAggregateCsv(p, config.top(), result.topTrace);
  record(p);
  return written;
}

}  // namespace fuzzscore
