#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "pwitness/index_set.hpp"
#include "pwitness/limits.hpp"
#include "pwitness/ratmat.hpp"

namespace pw {

/// Bit i is 1 iff (C_alpha(M)^{-1} q)_i > 0. Zero maps to 0.
class Outmap {
 public:
  Outmap() = default;
  explicit Outmap(IndexSet bits) : bits_(bits) {}

  std::size_t dimension() const noexcept { return bits_.dimension(); }
  bool bit(std::size_t i) const noexcept { return bits_.contains(i); }
  /// psupp of the outmap; the set of coordinates carrying a 1.
  const IndexSet& outdir() const noexcept { return bits_; }
  bool all_ones() const noexcept { return bits_ == IndexSet::full(dimension()); }
  bool all_zeros() const noexcept { return bits_.is_empty(); }
  std::string to_bits() const { return bits_.to_bits(); }

  friend Outmap operator^(const Outmap& a, const Outmap& b) { return Outmap(a.bits_ ^ b.bits_); }
  friend bool operator==(const Outmap&, const Outmap&) = default;

 private:
  IndexSet bits_;
};

/// M|alpha: rows and columns in alpha, increasing order.
RatMatrix principal_submatrix(const RatMatrix& m, const IndexSet& alpha);

/// det(M|alpha); 1 for the empty set.
Rational principal_minor(const RatMatrix& m, const IndexSet& alpha);

/// C_alpha(M): column j is -M_{.j} for j in alpha and e_j otherwise.
RatMatrix comp_matrix(const RatMatrix& m, const IndexSet& alpha);

/// C_alpha(M)^{-1} q. Throws SingularCompError(alpha).
RatVector comp_solve(const RatMatrix& m, const IndexSet& alpha, const RatVector& q);

/// Strict-positivity pattern of a vector.
Outmap sign_pattern(const RatVector& u);

/// psi_q(alpha, M). Throws SingularCompError(alpha).
Outmap outmap(const RatMatrix& m, const IndexSet& alpha, const RatVector& q);

struct PTestResult {
  /// First non-empty alpha in size-then-lex order with det(M|alpha) <= 0.
  std::optional<IndexSet> violation;
  bool is_p() const noexcept { return !violation.has_value(); }
};

/// Exhaustive P-matrix test over all 2^n - 1 non-empty principal minors.
/// Throws TooLargeError when n > limits.subsets.
PTestResult is_p_matrix(const RatMatrix& m, const Limits& limits = {});

/// True iff every entry of every C_alpha^{-1} q is non-zero.
/// Throws SingularCompError for the first singular C_alpha (cube order) and
/// TooLargeError above limits.subsets.
bool is_nondegenerate_q(const RatMatrix& m, const RatVector& q, const Limits& limits = {});

// -- Witnesses ---------------------------------------------------------------

/// Non-positive principal minor: det(M|alpha) <= 0.
struct PV1 {
  IndexSet alpha;
  friend bool operator==(const PV1&, const PV1&) = default;
};

/// Sign-reversing vector: x != 0 and x_i (Mx)_i <= 0 for all i.
struct PV2 {
  RatVector x;
  friend bool operator==(const PV2&, const PV2&) = default;
};

/// Singular complementary matrix C_alpha(M).
struct PV3Singular {
  IndexSet alpha;
  friend bool operator==(const PV3Singular&, const PV3Singular&) = default;
};

/// Two distinct vertices whose outmaps agree on every coordinate where the
/// vertices differ.
struct PV3TwoSinks {
  RatVector q;
  IndexSet alpha;
  IndexSet beta;
  friend bool operator==(const PV3TwoSinks&, const PV3TwoSinks&) = default;
};

using Witness = std::variant<PV1, PV2, PV3Singular, PV3TwoSinks>;

enum class WitnessKind { PV1, PV2, PV3 };

WitnessKind kind_of(const Witness& w);
/// "PV1", "PV2", "PV3SING" or "PV3SINKS".
std::string tag_of(const Witness& w);

bool verify_pv1(const RatMatrix& m, const PV1& w);
bool verify_pv2(const RatMatrix& m, const PV2& w);
bool verify_pv3(const RatMatrix& m, const PV3Singular& w);
bool verify_pv3(const RatMatrix& m, const PV3TwoSinks& w);

/// Exact check of the witness condition. Malformed witnesses (wrong
/// dimension, alpha == beta) verify false.
bool verify_witness(const RatMatrix& m, const Witness& w);

// -- Signature matrices --------------------------------------------------------

/// Diagonal matrix with entries -1 on `negated` and +1 elsewhere.
struct Signature {
  IndexSet negated;

  static Signature identity(std::size_t n) { return Signature{IndexSet::empty(n)}; }
  int entry(std::size_t i) const noexcept { return negated.contains(i) ? -1 : 1; }

  /// D M D
  RatMatrix conjugate(const RatMatrix& m) const;
  /// D x
  RatVector apply(const RatVector& x) const;
};

}  // namespace pw
