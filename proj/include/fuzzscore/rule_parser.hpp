#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzscore/rule.hpp"

namespace fuzzscore {

/// A non-fatal parser finding (duplicate antecedent patterns by default).
struct ParseWarning {
  int line = 0;
  int column = 0;
  std::string message;
};

struct ParsedRules {
  RuleBase rules;
  std::vector<ParseWarning> warnings;
};

/// Parse a rule-DSL document against declared variables.
///
/// Grammar (one rule per line, '#' starts a comment, keywords
/// case-insensitive, identifiers case-sensitive):
///
///   rule := "IF" term ("AND" term)* "THEN" var "IS" label ("WITH" float)?
///   term := var "IS" (label | "*")
///
/// Duplicate antecedent patterns resolve last-one-wins with a warning;
/// under `strict` they are errors. All hard failures throw RuleParseError
/// with a 1-based line / column position.
ParsedRules parseRules(std::string_view text, std::span<const LinguisticVariable> inputs,
                       const LinguisticVariable& output, bool strict = false);

/// Canonical DSL rendering; parseRules(renderRules(rb)) reproduces rb exactly.
std::string renderRules(const RuleBase& rb);

/// Shortest decimal form of a double that parses back to the same value.
std::string formatDouble(double value);

}  // namespace fuzzscore
