#pragma once

#include <stdexcept>
#include <string>

namespace cwoful {

/// Invalid construction parameters (dimension, regularization, bounds ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A violated call contract (bad weight, non-finite input, empty set ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Experiment config parse or validation failure, with source location.
class ConfigFileError : public std::runtime_error {
 public:
  ConfigFileError(std::string source, int line, std::string field,
                  const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + field +
                           ": " + message),
        source_(std::move(source)),
        line_(line),
        field_(std::move(field)) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

}  // namespace cwoful
