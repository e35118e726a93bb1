#ifndef ADCMODEL_ERRORS_HPP
#define ADCMODEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adcmodel {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad or missing input files, schema mappings, CLI arguments.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Dataset-level problems: missing file, zero valid rows, degenerate corpus.
class CorpusError : public Error {
 public:
  explicit CorpusError(const std::string& msg) : Error(msg) {}
};

/// Regression failures: collinear predictors, unusable partitions.
class FitError : public Error {
 public:
  explicit FitError(const std::string& msg) : Error(msg) {}
};

}  // namespace adcmodel

#endif
