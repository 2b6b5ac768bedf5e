#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assortnet {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A file could not be opened, read, or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Malformed input syntax. Carries the 1-based source line when known.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// The same paper identifier appeared more than once in one dataset.
class DuplicatePaperIdError : public ParseError {
public:
  DuplicatePaperIdError(const std::string& paper_id, std::size_t line = 0)
      : ParseError("duplicate paper_id \"" + paper_id + "\"", line) {}
};

/// Syntactically valid input that violates a model precondition.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// No record survived validation, so there is nothing to build a network from.
class EmptyNetworkError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Every raw record was rejected during ingest.
class AllRecordsDroppedError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A node with no ties was handed to an operation that needs degree >= 1.
class ZeroDegreeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A clique-count table disagrees with the claimed population sizes.
class InconsistentTableError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// The requested metric has no defined value on this input. Callers that
/// build reports catch this and carry the outcome in-band instead of failing.
class UndefinedMetricError : public Error {
public:
  using Error::Error;
};

/// Both metrics need both label classes present; one of them is empty.
class OneSidedPopulationError : public UndefinedMetricError {
public:
  OneSidedPopulationError()
      : UndefinedMetricError(
            "metric undefined: only one label class is present") {}
};

/// The mixing-matrix marginals leave the assortativity denominator at zero.
class DegenerateMixingError : public UndefinedMetricError {
public:
  DegenerateMixingError()
      : UndefinedMetricError(
            "metric undefined: degenerate mixing matrix (sum of marginal "
            "products is 1)") {}
};

}  // namespace assortnet
