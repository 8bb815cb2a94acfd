// Copies an engine stage's vocabulary and resolved rules into the oracle's
// plain structs. Only configuration data crosses; all arithmetic on the
// oracle side stays independent.
#pragma once

#include "fuzzscore/fis.hpp"
#include "oracle.hpp"

inline oracle::Var toOracleVar(const fuzzscore::LinguisticVariable& var) {
  oracle::Var v{var.lo(), var.hi(), {}};
  for (Eigen::Index j = 0; j < var.labelCount(); ++j) {
    const auto bp = var.labelMf(j).breakpoints();
    v.labels.push_back({bp[0], bp[1], bp[3]});
  }
  return v;
}

inline oracle::Fis toOracleFis(const fuzzscore::Fis& fis) {
  oracle::Fis o;
  for (const auto& var : fis.inputs()) o.inputs.push_back(toOracleVar(var));
  o.output = toOracleVar(fis.output());
  for (std::size_t r = 0; r < fis.rules().rules.size(); ++r)
    o.rules.push_back(
        {fis.resolvedPattern(r), fis.resolvedConsequent(r), fis.rules().rules[r].weight});
  return o;
}
