#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pwitness/index_set.hpp"

namespace pw {

/// Exact rational in canonical form (positive denominator, lowest terms).
using Rational = mpq_class;

using RatVector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  /// Square matrix with the given columns.
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  std::size_t size() const noexcept { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  RatVector column(std::size_t j) const;
  RatMatrix transpose() const;
  RatMatrix operator-() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& x);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Submatrix with rows in `rows` and columns in `cols`, in increasing index
/// order. The two sets must have equal size.
RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols);

/// Exact determinant by fraction-free (Bareiss) elimination. det of the
/// 0x0 matrix is 1.
Rational det(const RatMatrix& m);

/// Unique x with A x = b. Throws SingularError when det(A) = 0.
RatVector solve(const RatMatrix& a, const RatVector& b);

/// Non-zero x with A x = 0, from the reduced row echelon form with
/// smallest-index pivots: the smallest free variable is 1, the other free
/// variables are 0, and the result is scaled so its first non-zero entry is
/// positive. Throws NotSingularError when A is invertible.
RatVector kernel_vector(const RatMatrix& a);

/// Column i of A^{-1}. Throws SingularError.
RatVector inverse_column(const RatMatrix& a, std::size_t i);

/// Bit length of an integer: ceil(log2(|k|+1)), with 0 counted as 1 bit.
std::size_t bit_length(const mpz_class& k);

/// Encoding length: sum over entries of numerator bits + denominator bits,
/// at least 1.
std::size_t bit_size(const RatMatrix& m);

RatVector unit_vector(std::size_t n, std::size_t i);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& x);

bool is_zero(const RatVector& x);
/// Entries of x at the members of s, in increasing index order.
RatVector restrict_vector(const RatVector& x, const IndexSet& s);
/// Inverse of restrict_vector: places y at the members of s, zeros elsewhere.
RatVector pad_vector(const RatVector& y, const IndexSet& s);
/// Positive support {i : x_i > 0}.
IndexSet positive_support(const RatVector& x);

std::string to_string(const RatVector& x);

}  // namespace pw
