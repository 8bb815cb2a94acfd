#pragma once

#include <string>
#include <string_view>

#include "fuzzscore/construct.hpp"

namespace fuzzscore {

/// Parse the construct configuration format (see the repository README for
/// the schema). `baseDir` anchors `rules = file:...` references.
ConstructConfig parseConstructConfig(std::string_view text, const std::string& baseDir);

/// Load a construct configuration file from disk.
ConstructConfig loadConstructConfig(const std::string& path);

/// Canonical text form; parseConstructConfig(renderConstructConfig(c), dir)
/// reproduces c (rule files referenced by the config are not rewritten).
std::string renderConstructConfig(const ConstructConfig& config);

void saveConstructConfig(const ConstructConfig& config, const std::string& path);

}  // namespace fuzzscore
