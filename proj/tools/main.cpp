#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fuzzscore/config_file.hpp"
#include "fuzzscore/construct.hpp"
#include "fuzzscore/csv.hpp"
#include "fuzzscore/plot_data.hpp"
#include "fuzzscore/report.hpp"
#include "fuzzscore/rule_parser.hpp"

namespace {

using namespace fuzzscore;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitConfig = 3;

struct ConfigArgs {
  std::string configPath;
  std::string scale = "five_point";
};

void addConfigOptions(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("--config", args.configPath, "Construct configuration file");
  cmd->add_option("--scale", args.scale,
                  "Scale profile for the built-in default construct (five_point | seven_point); "
                  "ignored when --config is given")
      ->check(CLI::IsMember({"five_point", "seven_point"}));
}

ConstructConfig resolveConfig(const ConfigArgs& args) {
  if (!args.configPath.empty()) return loadConstructConfig(args.configPath);
  return defaultConstruct(scaleProfileFromString(args.scale));
}

LikertResponse parseResponseArg(const std::string& text) {
  LikertResponse r;
  r.id = "cli";
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (!text.empty() && text.back() == ',') parts.push_back("");
  if (parts.size() != kItemCount)
    throw DataError("--response needs " + std::to_string(kItemCount) +
                    " comma-separated values, got " + std::to_string(parts.size()));
  for (int i = 0; i < kItemCount; ++i) {
    std::string cell = parts[i];
    cell.erase(0, cell.find_first_not_of(" \t"));
    const std::size_t last = cell.find_last_not_of(" \t");
    cell.erase(last == std::string::npos ? 0 : last + 1);
    if (cell.empty()) continue;
    try {
      r.items[i] = std::stoi(cell);
    } catch (const std::exception&) {
      throw DataError("--response item " + std::to_string(i + 1) + ": non-integer value \"" +
                      cell + "\"");
    }
  }
  return r;
}

void writeTextFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write output file " + path);
  out << text;
}

const Fis& stageByName(const ConstructConfig& config, const std::string& name) {
  if (name == "top" || name == "overall") return config.top();
  for (const DimensionSpec& dim : config.dimensions())
    if (dim.name == name) return dim.fis;
  throw ConfigError("unknown stage \"" + name +
                    "\" (expected a dimension name, top, or overall)");
}

void printTrace(std::ostream& out, const Fis& fis, const FiringTrace& trace) {
  std::size_t silent = 0;
  for (std::size_t r = 0; r < trace.strengths.size(); ++r) {
    if (trace.strengths[r] <= 0.0) {
      ++silent;
      continue;
    }
    RuleBase one;
    one.rules.push_back(fis.rules().rules[r]);
    std::string text = renderRules(one);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    out << "    [" << formatDouble(trace.strengths[r]) << "] " << text << "\n";
  }
  out << "    (" << silent << " rules with zero strength omitted; aggregate mass "
      << formatDouble(trace.aggregateMass) << ", raw centroid "
      << formatDouble(trace.crispOutput) << ")\n";
}

int runScore(const ConfigArgs& cfgArgs, const std::string& input, const std::string& output,
             const std::string& format, bool impute, bool strict) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  const Dataset ds = loadCsv(input, config.profile(), strict);
  for (const RowDiagnostic& d : ds.diagnostics)
    std::cerr << input << ":" << d.line << ": column " << d.column << ": " << d.message
              << " (row rejected)\n";
  const ScoreReport report = scoreDataset(config, ds, impute, strict);
  writeTextFile(output, format == "csv" ? reportToCsv(report, config)
                                        : reportToJson(report, config, ds));
  std::cerr << "scored " << report.rowsScored << " rows";
  if (report.rowsFailed > 0) std::cerr << ", " << report.rowsFailed << " failed";
  if (ds.rejectedRows > 0) std::cerr << ", " << ds.rejectedRows << " rejected at load";
  std::cerr << "\n";
  return kExitOk;
}

int runValidate(const ConfigArgs& cfgArgs) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  std::cout << "scale: " << toString(config.profile()) << "\n";
  std::cout << "resolution: " << config.resolution() << "\n";
  std::cout << "rules: ";
  for (std::size_t d = 0; d < config.dimensions().size(); ++d)
    std::cout << (d ? "+" : "") << config.dimensions()[d].fis.rules().size();
  std::cout << "+" << config.top().rules().size() << "\n";
  std::cout << "calibration:\n";
  for (const DimensionSpec& dim : config.dimensions())
    std::cout << "  " << dim.name << ": c_min=" << formatDouble(dim.calibration.cMin)
              << " c_max=" << formatDouble(dim.calibration.cMax) << "\n";
  std::cout << "  overall_success: c_min=" << formatDouble(config.topCalibration().cMin)
            << " c_max=" << formatDouble(config.topCalibration().cMax) << "\n";
  std::cout << "ok\n";
  return kExitOk;
}

int runExplain(const ConfigArgs& cfgArgs, const std::string& responseText, bool impute) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  LikertResponse response = parseResponseArg(responseText);
  if (impute) response = imputeNeutral(response, config.profile());
  const EvaluationResult result = evaluate(config, response);

  std::cout << "response: " << responseText << "\n";
  for (std::size_t d = 0; d < config.dimensions().size(); ++d) {
    const DimensionSpec& dim = config.dimensions()[d];
    std::cout << dim.name << ": " << formatDouble(result.dimensionScores[d]) << "\n";
    printTrace(std::cout, dim.fis, result.dimensionTraces[d]);
  }
  std::cout << "overall_success: " << formatDouble(result.overall) << "\n";
  printTrace(std::cout, config.top(), result.topTrace);
  std::cout << "baseline_mean: " << formatDouble(result.baselineMean) << "\n";
  std::cout << "divergence: " << formatDouble(result.divergence) << "\n";
  return kExitOk;
}

int runPlotData(const ConfigArgs& cfgArgs, const std::string& outDir) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  const std::vector<std::string> files = emitPlotData(config, outDir);
  std::cerr << "wrote " << files.size() << " files to " << outDir << "\n";
  return kExitOk;
}

int runRulesGenerate(const ConfigArgs& cfgArgs, const std::string& fisName,
                     const std::string& outDir) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  if (!fisName.empty() && outDir.empty()) {
    std::cout << renderRules(stageByName(config, fisName).rules());
    return kExitOk;
  }
  if (outDir.empty()) throw DataError("rules generate needs --out <dir> or --fis <name>");
  std::filesystem::create_directories(outDir);
  auto writeStage = [&](const std::string& name, const Fis& fis) {
    const std::string path = (std::filesystem::path(outDir) / (name + ".rules")).string();
    writeTextFile(path, renderRules(fis.rules()));
  };
  if (fisName.empty()) {
    for (const DimensionSpec& dim : config.dimensions()) writeStage(dim.name, dim.fis);
    writeStage("top", config.top());
    std::cerr << "wrote 4 rule files to " << outDir << "\n";
  } else {
    writeStage(fisName == "overall" ? "top" : fisName, stageByName(config, fisName));
    std::cerr << "wrote 1 rule file to " << outDir << "\n";
  }
  return kExitOk;
}

int runRulesCheck(const ConfigArgs& cfgArgs, const std::string& fisName,
                  const std::string& rulesPath, bool strict) {
  const ConstructConfig config = resolveConfig(cfgArgs);
  const Fis& fis = stageByName(config, fisName);
  std::ifstream in(rulesPath);
  if (!in) throw DataError("no such file: " + rulesPath);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const ParsedRules parsed =
      parseRules(buffer.str(), fis.inputs(), fis.output(), strict);
  for (const ParseWarning& w : parsed.warnings)
    std::cerr << rulesPath << ":" << w.line << ":" << w.column << ": warning: " << w.message
              << "\n";
  std::cout << "ok: " << parsed.rules.size() << " rules\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical Mamdani fuzzy scoring of 14-item project-success surveys"};
  app.require_subcommand(1);

  ConfigArgs scoreCfg, validateCfg, explainCfg, plotCfg, rulesCfg;

  auto* score = app.add_subcommand("score", "Score a CSV of survey responses");
  std::string scoreInput, scoreOutput, scoreFormat = "json";
  bool scoreImpute = false, scoreStrict = false;
  addConfigOptions(score, scoreCfg);
  score->add_option("--input", scoreInput, "Input CSV file")->required();
  score->add_option("--output", scoreOutput, "Output file path (- for stdout)")->required();
  score->add_option("--format", scoreFormat, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  score->add_flag("--impute-neutral", scoreImpute, "Replace missing items with the midpoint");
  score->add_flag("--strict", scoreStrict, "Abort on the first bad row");

  auto* validate = app.add_subcommand("validate", "Check a construct configuration");
  addConfigOptions(validate, validateCfg);

  auto* explain = app.add_subcommand("explain", "Score one response with a firing trace");
  std::string explainResponse;
  bool explainImpute = false;
  addConfigOptions(explain, explainCfg);
  explain->add_option("--response", explainResponse, "14 comma-separated item values")
      ->required();
  explain->add_flag("--impute-neutral", explainImpute,
                    "Replace missing items with the midpoint");

  auto* plotData = app.add_subcommand("plot-data", "Emit membership / aggregate CSVs");
  std::string plotOut;
  addConfigOptions(plotData, plotCfg);
  plotData->add_option("--out", plotOut, "Output directory")->required();

  auto* rules = app.add_subcommand("rules", "Rule DSL utilities");
  rules->require_subcommand(1);
  addConfigOptions(rules, rulesCfg);
  auto* rulesGenerate = rules->add_subcommand("generate", "Emit rule files for a construct");
  std::string rulesFis, rulesOut;
  rulesGenerate->add_option("--fis", rulesFis, "Stage name (dimension, top) to emit");
  rulesGenerate->add_option("--out", rulesOut, "Output directory");
  auto* rulesCheck = rules->add_subcommand("check", "Lint a rule DSL file against a stage");
  std::string checkFis, checkFile;
  bool checkStrict = false;
  rulesCheck->add_option("--fis", checkFis, "Stage name the file targets")->required();
  rulesCheck->add_option("file", checkFile, "Rule DSL file")->required();
  rulesCheck->add_flag("--strict", checkStrict, "Duplicate patterns are errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (score->parsed())
      return runScore(scoreCfg, scoreInput, scoreOutput, scoreFormat, scoreImpute, scoreStrict);
    if (validate->parsed()) return runValidate(validateCfg);
    if (explain->parsed()) return runExplain(explainCfg, explainResponse, explainImpute);
    if (plotData->parsed()) return runPlotData(plotCfg, plotOut);
    if (rules->parsed()) {
      if (rulesGenerate->parsed()) return runRulesGenerate(rulesCfg, rulesFis, rulesOut);
      if (rulesCheck->parsed()) return runRulesCheck(rulesCfg, checkFis, checkFile, checkStrict);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
