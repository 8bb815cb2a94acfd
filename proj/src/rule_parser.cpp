#include "fuzzscore/rule_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace fuzzscore {

std::string formatDouble(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return {buf, ptr};
}

namespace {

struct Token {
  enum class Kind { Word, Star, Number, End };
  Kind kind = Kind::End;
  std::string text;
  int column = 0;  // 1-based
  double number = 0.0;
};

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::vector<Token> tokenizeLine(std::string_view line, int lineNo) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int column = static_cast<int>(i) + 1;
    if (c == '*') {
      tokens.push_back({Token::Kind::Star, "*", column, 0.0});
      ++i;
      continue;
    }
    if (isIdentStart(c)) {
      std::size_t j = i + 1;
      while (j < line.size() && isIdentChar(line[j])) ++j;
      tokens.push_back({Token::Kind::Word, std::string(line.substr(i, j - i)), column, 0.0});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.'))
        ++j;
      const std::string text(line.substr(i, j - i));
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size())
        throw RuleParseError(lineNo, column, "malformed number \"" + text + "\"");
      tokens.push_back({Token::Kind::Number, text, column, value});
      i = j;
      continue;
    }
    throw RuleParseError(lineNo, column, std::string("unexpected character '") + c + "'");
  }
  tokens.push_back({Token::Kind::End, "", static_cast<int>(line.size()) + 1, 0.0});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int lineNo)
      : tokens_(std::move(tokens)), lineNo_(lineNo) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool atEnd() const { return peek().kind == Token::Kind::End; }

  bool peekKeyword(std::string_view kw) const {
    return peek().kind == Token::Kind::Word && upper(peek().text) == kw;
  }

  void expectKeyword(std::string_view kw) {
    const Token& t = peek();
    if (!peekKeyword(kw)) fail(t, std::string(kw));
    next();
  }

  std::pair<std::string, int> expectIdentifier(std::string_view what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Word) fail(t, std::string(what));
    for (const char* kw : {"IF", "AND", "THEN", "IS", "WITH"})
      if (upper(t.text) == kw) fail(t, std::string(what));
    next();
    return {t.text, t.column};
  }

  [[noreturn]] void fail(const Token& got, const std::string& expected) const {
    std::ostringstream msg;
    msg << "expected " << expected << ", got ";
    if (got.kind == Token::Kind::End)
      msg << "end of line";
    else
      msg << '"' << got.text << '"';
    throw RuleParseError(lineNo_, got.column, msg.str());
  }

  int lineNo() const { return lineNo_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int lineNo_;
};

struct LocatedRule {
  Rule rule;
  int line;
};

LocatedRule parseRuleLine(LineParser& p, std::span<const LinguisticVariable> inputs,
                          const LinguisticVariable& output) {
  auto findInput = [&](const std::string& name) -> const LinguisticVariable* {
    for (const auto& var : inputs)
      if (var.name() == name) return &var;
    return nullptr;
  };

  Rule rule;
  p.expectKeyword("IF");
  while (true) {
    auto [varName, varCol] = p.expectIdentifier("input variable name");
    const LinguisticVariable* var = findInput(varName);
    if (var == nullptr)
      throw RuleParseError(p.lineNo(), varCol, "unknown variable \"" + varName + "\"");
    for (const RuleTerm& prior : rule.antecedent)
      if (prior.variable == varName)
        throw RuleParseError(p.lineNo(), varCol,
                             "variable \"" + varName + "\" appears twice in the antecedent");
    p.expectKeyword("IS");
    RuleTerm term{varName, std::nullopt};
    if (p.peek().kind == Token::Kind::Star) {
      p.next();
    } else {
      auto [labelName, labelCol] = p.expectIdentifier("label name or *");
      if (!var->labelIndex(labelName))
        throw RuleParseError(p.lineNo(), labelCol,
                             "unknown label \"" + labelName + "\" for variable \"" + varName +
                                 "\"");
      term.label = labelName;
    }
    rule.antecedent.push_back(std::move(term));
    if (p.peekKeyword("AND")) {
      p.next();
      continue;
    }
    break;
  }

  p.expectKeyword("THEN");
  auto [outName, outCol] = p.expectIdentifier("output variable name");
  if (outName != output.name())
    throw RuleParseError(p.lineNo(), outCol,
                         "consequent variable \"" + outName + "\" is not the output \"" +
                             output.name() + "\"");
  rule.outputVariable = outName;
  p.expectKeyword("IS");
  auto [outLabel, outLabelCol] = p.expectIdentifier("output label name");
  if (!output.labelIndex(outLabel))
    throw RuleParseError(p.lineNo(), outLabelCol, "unknown output label \"" + outLabel + "\"");
  rule.outputLabel = outLabel;

  if (p.peekKeyword("WITH")) {
    p.next();
    const Token& t = p.peek();
    if (t.kind != Token::Kind::Number) p.fail(t, "rule weight");
    if (!(t.number > 0.0 && t.number <= 1.0))
      throw RuleParseError(p.lineNo(), t.column, "rule weight must lie in (0, 1]");
    rule.weight = t.number;
    p.next();
  }
  if (!p.atEnd()) p.fail(p.peek(), "end of line");
  return {std::move(rule), p.lineNo()};
}

/// Normalized antecedent pattern over the declared input order; -1 = wildcard.
std::vector<int> patternKey(const Rule& rule, std::span<const LinguisticVariable> inputs) {
  std::vector<int> key(inputs.size(), -1);
  for (const RuleTerm& term : rule.antecedent) {
    if (term.isWildcard()) continue;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      if (inputs[i].name() == term.variable) {
        key[i] = static_cast<int>(*inputs[i].labelIndex(*term.label));
        break;
      }
  }
  return key;
}

}  // namespace

ParsedRules parseRules(std::string_view text, std::span<const LinguisticVariable> inputs,
                       const LinguisticVariable& output, bool strict) {
  std::vector<LocatedRule> parsed;
  std::vector<ParseWarning> warnings;

  int lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser p(tokenizeLine(line, lineNo), lineNo);
    if (!p.atEnd()) parsed.push_back(parseRuleLine(p, inputs, output));

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  if (parsed.empty()) throw RuleParseError(1, 1, "no rules");

  // Last-one-wins on duplicate antecedent patterns.
  std::map<std::vector<int>, std::size_t> byPattern;
  std::vector<bool> dropped(parsed.size(), false);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const std::vector<int> key = patternKey(parsed[i].rule, inputs);
    auto [it, inserted] = byPattern.try_emplace(key, i);
    if (!inserted) {
      const std::size_t earlier = it->second;
      if (strict)
        throw RuleParseError(parsed[i].line, 1,
                             "duplicate antecedent pattern (first seen at line " +
                                 std::to_string(parsed[earlier].line) + ")");
      warnings.push_back({parsed[i].line, 1,
                          "duplicate antecedent pattern replaces the rule from line " +
                              std::to_string(parsed[earlier].line)});
      dropped[earlier] = true;
      it->second = i;
    }
  }

  RuleBase rb;
  rb.source = RuleSource::Parsed;
  for (std::size_t i = 0; i < parsed.size(); ++i)
    if (!dropped[i]) rb.rules.push_back(std::move(parsed[i].rule));
  return {std::move(rb), std::move(warnings)};
}

std::string renderRules(const RuleBase& rb) {
  std::string out;
  for (const Rule& rule : rb.rules) {
    out += "IF ";
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
      const RuleTerm& term = rule.antecedent[i];
      if (i > 0) out += " AND ";
      out += term.variable;
      out += " IS ";
      out += term.isWildcard() ? "*" : *term.label;
    }
    out += " THEN ";
    out += rule.outputVariable;
    out += " IS ";
    out += rule.outputLabel;
    if (rule.weight != 1.0) {
      out += " WITH ";
      out += formatDouble(rule.weight);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fuzzscore
