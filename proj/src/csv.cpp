#include "fuzzscore/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fuzzscore {

namespace {

// Splits one CSV record. Double quotes delimit fields that contain commas;
// "" inside a quoted field is a literal quote. No multi-line fields.
std::vector<std::string> splitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Dataset readCsv(std::istream& in, const std::string& sourcePath, ScaleProfile profile,
                bool strict) {
  Dataset ds;
  ds.sourcePath = sourcePath;

  std::string line;
  if (!std::getline(in, line))
    throw DataError(sourcePath + ": empty file; a header row is required");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::vector<std::string> header = splitCsvLine(line);
  int idColumn = -1;
  std::array<int, kItemCount> itemColumn;
  itemColumn.fill(-1);
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string name = trim(header[c]);
    if (name == "id") idColumn = static_cast<int>(c);
    for (int i = 1; i <= kItemCount; ++i)
      if (name == itemVariableName(i)) itemColumn[i - 1] = static_cast<int>(c);
  }
  for (int i = 1; i <= kItemCount; ++i)
    if (itemColumn[i - 1] < 0)
      throw DataError(sourcePath + ": missing required column \"" + itemVariableName(i) + "\"");

  const int hi = static_cast<int>(scaleHi(profile));
  int lineNo = 1;
  int dataRow = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++dataRow;

    const std::vector<std::string> fields = splitCsvLine(line);
    LikertResponse row;
    row.id = idColumn >= 0 && static_cast<std::size_t>(idColumn) < fields.size()
                 ? trim(fields[idColumn])
                 : "row_" + std::to_string(dataRow);

    bool ok = true;
    for (int i = 1; i <= kItemCount && ok; ++i) {
      const auto c = static_cast<std::size_t>(itemColumn[i - 1]);
      const std::string cell = c < fields.size() ? trim(fields[c]) : "";
      if (cell.empty()) continue;  // missing value
      int value = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        ds.diagnostics.push_back({lineNo, itemVariableName(i),
                                  "non-integer value \"" + cell + "\""});
        ok = false;
      } else if (value < 1 || value > hi) {
        ds.diagnostics.push_back({lineNo, itemVariableName(i),
                                  "value " + std::to_string(value) + " out of range 1.." +
                                      std::to_string(hi)});
        ok = false;
      } else {
        row.items[i - 1] = value;
      }
    }
    if (ok)
      ds.rows.push_back(std::move(row));
    else
      ++ds.rejectedRows;
  }

  if (strict && !ds.diagnostics.empty()) {
    const RowDiagnostic& d = ds.diagnostics.front();
    throw DataError(sourcePath + ":" + std::to_string(d.line) + ": column " + d.column + ": " +
                    d.message + " (strict mode)");
  }
  return ds;
}

Dataset loadCsv(const std::string& path, ScaleProfile profile, bool strict) {
  std::ifstream in(path);
  if (!in) throw DataError("no such file: " + path);
  return readCsv(in, path, profile, strict);
}

}  // namespace fuzzscore
