#pragma once

#include <stdexcept>
#include <string>

namespace repdec {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1; usage problems are handled separately by the parser.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

class SingularMatrixError : public Error {
public:
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// Zero (or otherwise unusable) pivot met while factoring a Hermitian matrix.
// Carries the 0-based pivot index so callers can report which leading minor
// failed.
class ZeroPivotError : public Error {
public:
  ZeroPivotError(int index, const std::string& what) : Error(what), index_(index) {}
  int index() const { return index_; }

private:
  int index_;
};

class NotInGroupError : public Error {
public:
  explicit NotInGroupError(const std::string& what) : Error(what) {}
};

// Raised when an exact computation would exceed a configured resource budget
// (Kronecker memory estimate, orbit worklist size). Callers treat this as a
// signal to fall back to a cheaper strategy, not as a hard failure.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

// Group too large for full enumeration.
class TooLargeError : public Error {
public:
  explicit TooLargeError(const std::string& what) : Error(what) {}
};

class SchemaError : public Error {
public:
  SchemaError(const std::string& field, const std::string& what)
      : Error(what), field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

// Inconsistent inputs detected by a cross-check (e.g. an irrep list that is
// not complete for the group it claims to describe).
class ConsistencyError : public Error {
public:
  explicit ConsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace repdec
