// Copyright the slitwave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SLITWAVE_ERRORS_HPP
#define SLITWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slitwave {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter value (out of the physical/validity range).
class DomainError : public Error {
public:
  using Error::Error;
};

// Inconsistent or degenerate geometry (overlapping slits, wall collision).
class GeometryError : public DomainError {
public:
  using DomainError::DomainError;
};

// Inputs computed at incompatible parameters were mixed.
class MismatchError : public DomainError {
public:
  using DomainError::DomainError;
};

// An operation was used outside the regime where its formula is meaningful.
class RegimeError : public DomainError {
public:
  using DomainError::DomainError;
};

// A series or refinement loop failed to stabilize within tolerance.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// The requested mesh cannot be built (resolution, degenerate truncation).
class MeshError : public Error {
public:
  using Error::Error;
};

// Linear solver or amplitude-system failure.
class SolveError : public Error {
public:
  using Error::Error;
};

// Malformed input file; carries a line number when known.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_ = 0;
};

}  // namespace slitwave

#endif  // SLITWAVE_ERRORS_HPP
