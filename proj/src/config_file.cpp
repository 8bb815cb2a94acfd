#include "fuzzscore/config_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzscore/rule_parser.hpp"

namespace fuzzscore {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string stripComment(std::string_view line) {
  const std::size_t hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

double parseNumber(const std::string& text, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("config line " + std::to_string(line) + ": malformed number \"" + text +
                      "\"");
  return value;
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    out.push_back(trim(text.substr(
        start, comma == std::string::npos ? text.size() - start : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

struct RawStage {
  std::vector<int> items;
  std::vector<double> itemWeights;
  bool hasItems = false;
  bool hasWeights = false;
  std::string rulesValue = "generated";
};

struct RawConfig {
  ScaleProfile profile = ScaleProfile::FivePoint;
  Eigen::Index resolution = 1001;
  OperatorSet ops;
  std::map<std::string, double> dimensionWeights;
  std::map<std::string, RawStage> dimensions;      // keyed by dimension name
  std::vector<std::string> dimensionOrderSeen;
  std::string topRulesValue = "generated";
  std::map<std::string, std::string> inlineRules;  // stage name ("top" allowed) -> DSL text
};

bool isDimensionName(const std::string& name) {
  for (const auto& canonical : dimensionNames())
    if (canonical == name) return true;
  return false;
}

RawConfig readRaw(std::string_view text) {
  RawConfig raw;
  std::string section;      // "", "operators", "dimension_weights", "dimension:<n>", "top", "rules:<n>"
  std::string rulesTarget;  // for rules sections

  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view rawLine =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineNo;
    if (!rawLine.empty() && rawLine.back() == '\r') rawLine.remove_suffix(1);

    // Inside a rules section every non-header line passes through verbatim.
    const std::string headerProbe = stripComment(rawLine);
    const bool isHeader = headerProbe.size() >= 2 && headerProbe.front() == '[' &&
                          headerProbe.back() == ']';
    if (!rulesTarget.empty() && !isHeader) {
      raw.inlineRules[rulesTarget] += std::string(rawLine) + "\n";
      if (nl == std::string_view::npos) break;
      start = nl + 1;
      continue;
    }

    const std::string line = headerProbe;
    if (line.empty()) {
      if (nl == std::string_view::npos) break;
      start = nl + 1;
      continue;
    }

    if (isHeader) {
      const std::string name = trim(line.substr(1, line.size() - 2));
      rulesTarget.clear();
      if (name == "operators" || name == "dimension_weights" || name == "top") {
        section = name;
      } else if (name.starts_with("dimension ")) {
        const std::string dim = trim(name.substr(10));
        if (!isDimensionName(dim))
          throw ConfigError("config line " + std::to_string(lineNo) +
                            ": unknown dimension \"" + dim + "\"");
        section = "dimension:" + dim;
        if (!raw.dimensions.count(dim)) raw.dimensionOrderSeen.push_back(dim);
        raw.dimensions[dim];  // create
      } else if (name.starts_with("rules ")) {
        const std::string stage = trim(name.substr(6));
        if (stage != "top" && !isDimensionName(stage))
          throw ConfigError("config line " + std::to_string(lineNo) + ": unknown rules stage \"" +
                            stage + "\"");
        section = "rules:" + stage;
        rulesTarget = stage;
        raw.inlineRules[stage];  // create
      } else {
        throw ConfigError("config line " + std::to_string(lineNo) + ": unknown section [" +
                          name + "]");
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineNo) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (section.empty()) {
      if (key == "scale")
        raw.profile = scaleProfileFromString(value);
      else if (key == "resolution")
        raw.resolution = static_cast<Eigen::Index>(parseNumber(value, lineNo));
      else
        throw ConfigError("config line " + std::to_string(lineNo) + ": unknown key \"" + key +
                          "\"");
    } else if (section == "operators") {
      if (key == "and")
        raw.ops.andOp = tnormFromString(value);
      else if (key == "or")
        raw.ops.orOp = snormFromString(value);
      else if (key == "implication")
        raw.ops.implication = implicationFromString(value);
      else if (key == "aggregation")
        raw.ops.aggregation = aggregationFromString(value);
      else
        throw ConfigError("config line " + std::to_string(lineNo) +
                          ": unknown operator key \"" + key + "\"");
    } else if (section == "dimension_weights") {
      if (!isDimensionName(key))
        throw ConfigError("config line " + std::to_string(lineNo) + ": unknown dimension \"" +
                          key + "\"");
      raw.dimensionWeights[key] = parseNumber(value, lineNo);
    } else if (section == "top") {
      if (key == "rules")
        raw.topRulesValue = value;
      else
        throw ConfigError("config line " + std::to_string(lineNo) + ": unknown key \"" + key +
                          "\" in [top]");
    } else if (section.starts_with("dimension:")) {
      RawStage& stage = raw.dimensions[section.substr(10)];
      if (key == "items") {
        stage.items.clear();
        for (const std::string& idx : splitList(value))
          stage.items.push_back(static_cast<int>(parseNumber(idx, lineNo)));
        stage.hasItems = true;
      } else if (key == "item_weights") {
        stage.itemWeights.clear();
        for (const std::string& w : splitList(value))
          stage.itemWeights.push_back(parseNumber(w, lineNo));
        stage.hasWeights = true;
      } else if (key == "rules") {
        stage.rulesValue = value;
      } else {
        throw ConfigError("config line " + std::to_string(lineNo) + ": unknown key \"" + key +
                          "\" in dimension section");
      }
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return raw;
}

struct StageRules {
  RuleOrigin origin;
  std::optional<RuleBase> rules;
};

StageRules resolveRules(const std::string& stageName, const std::string& rulesValue,
                        const RawConfig& raw, const std::string& baseDir,
                        std::span<const LinguisticVariable> inputs,
                        const LinguisticVariable& output) {
  StageRules out;
  if (rulesValue == "generated") {
    out.origin = {RuleOrigin::Kind::Generated, ""};
    return out;
  }
  if (rulesValue == "inline") {
    const auto it = raw.inlineRules.find(stageName);
    if (it == raw.inlineRules.end())
      throw ConfigError("stage \"" + stageName + "\" declares inline rules but has no [rules " +
                        stageName + "] section");
    out.origin = {RuleOrigin::Kind::Inline, ""};
    out.rules = parseRules(it->second, inputs, output).rules;
    return out;
  }
  if (rulesValue.starts_with("file:")) {
    const std::string ref = trim(rulesValue.substr(5));
    if (ref.empty()) throw ConfigError("stage \"" + stageName + "\": empty rules file path");
    const fs::path path = fs::path(ref).is_absolute() ? fs::path(ref) : fs::path(baseDir) / ref;
    std::ifstream in(path);
    if (!in)
      throw ConfigError("stage \"" + stageName + "\": cannot read rules file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    out.origin = {RuleOrigin::Kind::File, ref};
    out.rules = parseRules(buffer.str(), inputs, output).rules;
    return out;
  }
  throw ConfigError("stage \"" + stageName + "\": rules must be generated, inline or file:<path>");
}

}  // namespace

ConstructConfig parseConstructConfig(std::string_view text, const std::string& baseDir) {
  const RawConfig raw = readRaw(text);

  ConstructDef def;
  def.profile = raw.profile;
  def.resolution = raw.resolution;
  def.ops = raw.ops;

  const double lo = scaleLo(raw.profile);
  const double hi = scaleHi(raw.profile);

  for (const auto& name : dimensionNames()) {
    const auto it = raw.dimensions.find(name);
    if (it == raw.dimensions.end())
      throw ConfigError("missing section [dimension " + name + "]");
    const RawStage& stage = it->second;
    if (!stage.hasItems)
      throw ConfigError("dimension \"" + name + "\": missing items = ...");

    DimensionDef dim;
    dim.name = name;
    dim.itemIndices = stage.items;

    std::vector<LinguisticVariable> inputs;
    for (int item : stage.items)
      inputs.push_back(successPartition(itemVariableName(item), lo, hi));
    const LinguisticVariable output = levelPartition(name, lo, hi);

    if (stage.hasWeights) {
      if (stage.itemWeights.size() != stage.items.size())
        throw ConfigError("dimension \"" + name + "\": item_weights size " +
                          std::to_string(stage.itemWeights.size()) + " does not match items (" +
                          std::to_string(stage.items.size()) + ")");
      WeightProfile wp;
      for (std::size_t i = 0; i < stage.items.size(); ++i)
        wp.set(itemVariableName(stage.items[i]), stage.itemWeights[i]);
      dim.itemWeights = std::move(wp);
    }

    StageRules rules = resolveRules(name, stage.rulesValue, raw, baseDir, inputs, output);
    dim.ruleOrigin = rules.origin;
    dim.rules = std::move(rules.rules);
    def.dimensions.push_back(std::move(dim));
  }

  if (!raw.dimensionWeights.empty()) {
    WeightProfile wp;
    for (const auto& name : dimensionNames()) {
      const auto it = raw.dimensionWeights.find(name);
      if (it == raw.dimensionWeights.end())
        throw ConfigError("dimension_weights: missing \"" + name + "\"");
      wp.set(name, it->second);
    }
    def.dimensionWeights = std::move(wp);
  }

  {
    std::vector<LinguisticVariable> topInputs;
    for (const auto& name : dimensionNames())
      topInputs.push_back(successPartition(name, lo, hi));
    const LinguisticVariable topOutput = levelPartition("overall_success", lo, hi);
    StageRules rules =
        resolveRules("top", raw.topRulesValue, raw, baseDir, topInputs, topOutput);
    def.topRuleOrigin = rules.origin;
    def.topRules = std::move(rules.rules);
  }

  return ConstructConfig(std::move(def));
}

ConstructConfig loadConstructConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("no such config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseConstructConfig(buffer.str(), fs::path(path).parent_path().string());
}

namespace {

std::string rulesValueFor(const RuleOrigin& origin) {
  switch (origin.kind) {
    case RuleOrigin::Kind::Generated:
      return "generated";
    case RuleOrigin::Kind::Inline:
      return "inline";
    case RuleOrigin::Kind::File:
      return "file:" + origin.path;
  }
  return "generated";
}

}  // namespace

std::string renderConstructConfig(const ConstructConfig& config) {
  std::ostringstream out;
  out << "scale = " << toString(config.profile()) << "\n";
  out << "resolution = " << config.resolution() << "\n\n";

  out << "[operators]\n";
  out << "and = " << toString(config.ops().andOp) << "\n";
  out << "or = " << toString(config.ops().orOp) << "\n";
  out << "implication = " << toString(config.ops().implication) << "\n";
  out << "aggregation = " << toString(config.ops().aggregation) << "\n\n";

  out << "[dimension_weights]\n";
  for (const auto& [name, weight] : config.dimensionWeights().entries())
    out << name << " = " << formatDouble(weight) << "\n";
  out << "\n";

  for (const DimensionSpec& dim : config.dimensions()) {
    out << "[dimension " << dim.name << "]\n";
    out << "items = ";
    for (std::size_t i = 0; i < dim.itemIndices.size(); ++i)
      out << (i ? ", " : "") << dim.itemIndices[i];
    out << "\n";
    out << "item_weights = ";
    for (std::size_t i = 0; i < dim.itemIndices.size(); ++i)
      out << (i ? ", " : "") << formatDouble(dim.itemWeights.at(itemVariableName(dim.itemIndices[i])));
    out << "\n";
    out << "rules = " << rulesValueFor(dim.ruleOrigin) << "\n\n";
  }

  out << "[top]\n";
  out << "rules = " << rulesValueFor(config.topRuleOrigin()) << "\n";

  for (const DimensionSpec& dim : config.dimensions())
    if (dim.ruleOrigin.kind == RuleOrigin::Kind::Inline) {
      out << "\n[rules " << dim.name << "]\n";
      out << renderRules(dim.fis.rules());
    }
  if (config.topRuleOrigin().kind == RuleOrigin::Kind::Inline) {
    out << "\n[rules top]\n";
    out << renderRules(config.top().rules());
  }
  return out.str();
}

void saveConstructConfig(const ConstructConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file " + path);
  out << renderConstructConfig(config);
}

}  // namespace fuzzscore
