#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "pwitness/index_set.hpp"

namespace pw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system or inverse was requested for a matrix with determinant 0.
class SingularError : public Error {
 public:
  SingularError() : Error("matrix is singular") {}
};

/// A kernel vector was requested for an invertible matrix.
class NotSingularError : public Error {
 public:
  NotSingularError() : Error("matrix is not singular") {}
};

/// C_alpha(M) is singular. The subset is itself a PV3 (singular) witness.
class SingularCompError : public Error {
 public:
  explicit SingularCompError(IndexSet subset)
      : Error("complementary matrix is singular for " + subset.to_string()),
        subset_(subset) {}
  const IndexSet& subset() const noexcept { return subset_; }

 private:
  IndexSet subset_;
};

/// An exponential enumeration was requested above its dimension cap.
class TooLargeError : public Error {
 public:
  TooLargeError(std::size_t n, std::size_t cap)
      : Error("dimension " + std::to_string(n) + " exceeds cap " +
              std::to_string(cap)),
        n_(n),
        cap_(cap) {}
  std::size_t dimension() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// The input certificate does not verify against the matrix.
class NotAWitnessError : public Error {
 public:
  explicit NotAWitnessError(const std::string& what)
      : Error("not a witness: " + what) {}
};

/// A two-sinks certificate verifies only because some coordinate of
/// C^{-1}q is exactly zero; no minor can be recovered from it.
class DegenerateWitnessError : public Error {
 public:
  explicit DegenerateWitnessError(const std::string& what)
      : Error("degenerate witness: " + what) {}
};

/// Inverse iteration did not produce an exact sign-reversing vector.
class IterationLimitError : public Error {
 public:
  explicit IterationLimitError(std::size_t sweeps)
      : Error("inverse iteration gave up after " + std::to_string(sweeps) +
              " sweeps") {}
};

/// Column i of A^{-1} has no positive entry, so reduce_i is undefined.
class NoPositiveEntryError : public Error {
 public:
  explicit NoPositiveEntryError(std::size_t column)
      : Error("column " + std::to_string(column + 1) +
              " of the inverse has no positive entry"),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A sink-walk step found a principal minor that is not positive.
/// The subset is a PV1 witness.
class PreconditionViolatedError : public Error {
 public:
  explicit PreconditionViolatedError(IndexSet subset)
      : Error("non-positive principal minor at " + subset.to_string()),
        subset_(subset) {}
  const IndexSet& subset() const noexcept { return subset_; }

 private:
  IndexSet subset_;
};

/// Linear objective with a zero coefficient.
class DegenerateObjectiveError : public Error {
 public:
  explicit DegenerateObjectiveError(std::size_t i)
      : Error("objective coefficient " + std::to_string(i + 1) + " is zero") {}
};

/// An invariant that the mathematics guarantees was observed to fail.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal assertion failed: " + what) {}
};

/// Malformed text input, positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        message_(what) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The diagnostic without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace pw
