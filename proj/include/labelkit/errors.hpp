#pragma once

#include <stdexcept>
#include <string>

namespace labelkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (size mismatch, bad index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A poset relation, hypergraph or labeling failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The exact isomorphism oracle refuses inputs above its size bound.
class OracleUnavailable : public Error {
 public:
  using Error::Error;
};

/// Higher-order WL would exceed its configured tuple budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Mathematical domain error (e.g. log(1) in an Adamic-Adar denominator).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// SGD training diverged (loss exceeded ten times its initial value).
class TrainingDiverged : public Error {
 public:
  using Error::Error;
};

}  // namespace labelkit
