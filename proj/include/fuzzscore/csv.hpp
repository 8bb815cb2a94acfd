#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzscore/construct.hpp"

namespace fuzzscore {

/// A per-cell problem found while loading; the owning row was rejected.
struct RowDiagnostic {
  int line = 0;  // 1-based file line (header is line 1)
  std::string column;
  std::string message;
};

struct Dataset {
  std::vector<LikertResponse> rows;
  std::string sourcePath;
  std::vector<RowDiagnostic> diagnostics;
  int rejectedRows = 0;
};

/// Load survey responses from a CSV file with columns "id","item_01".."item_14"
/// (the id column is optional; row ids are synthesized as row_<n> without it).
/// Blank item cells are missing values. Rows with non-integer or out-of-scale
/// cells are rejected with a diagnostic; under `strict` any bad cell aborts
/// the load. A missing required column always throws DataError.
Dataset loadCsv(const std::string& path, ScaleProfile profile, bool strict = false);

/// Stream variant of loadCsv; sourcePath is only used in messages.
Dataset readCsv(std::istream& in, const std::string& sourcePath, ScaleProfile profile,
                bool strict = false);

}  // namespace fuzzscore
