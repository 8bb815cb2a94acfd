#pragma once

#include <stdexcept>
#include <string>

namespace fuzzscore {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration: variables, rule bases, construct layout, config files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid input data: survey responses, CSV rows, out-of-universe values.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Rule DSL parse failure, carrying a 1-based source position.
class RuleParseError : public ConfigError {
 public:
  RuleParseError(int line, int column, const std::string& message)
      : ConfigError("line " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                    message),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace fuzzscore
