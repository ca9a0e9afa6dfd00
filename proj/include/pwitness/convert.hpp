#pragma once

// Polynomial-time conversions between the three kinds of non-P-matrix
// certificates. Every conversion verifies its own output exactly before
// returning and throws InternalError if that check ever fails.

#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "pwitness/core.hpp"
#include "pwitness/index_set.hpp"
#include "pwitness/ratmat.hpp"

namespace pw {

// -- Non-positive minor -> sign-reversing vector ------------------------------

/// Exact route. A zero minor yields a zero-padded kernel vector of M|alpha.
/// A negative minor is first shrunk while some det(M|alpha-i) <= 0
/// (smallest i first); once every co-dimension-1 minor is positive the
/// result is -(M|alpha)^{-1} e_j for the smallest j in alpha, zero-padded.
/// Throws NotAWitnessError unless det(M|alpha) <= 0 and alpha is non-empty.
RatVector pv1_to_pv2(const RatMatrix& m, const IndexSet& alpha);

struct EigenOptions {
  std::size_t max_sweeps = 64;
  std::size_t bisection_steps = 64;
};

/// Eigenvector route: isolates a negative real eigenvalue of M|alpha by
/// bisection on its exact characteristic polynomial, then runs inverse
/// iteration in rational arithmetic from the bracket midpoint, rounding each
/// iterate to dyadic candidates that are checked exactly. The result is
/// scaled so its largest-magnitude entry is 1.
/// Throws NotAWitnessError unless det(M|alpha) < 0, and IterationLimitError
/// when no candidate verifies within max_sweeps.
RatVector pv1_to_pv2_eigen(const RatMatrix& m, const IndexSet& alpha, const EigenOptions& options = {});

/// Coefficients c_0..c_k of det(lambda I - A), exact (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const RatMatrix& a);

// -- Sign-reversing vector -> non-positive minor -------------------------------

/// Output of normalize_pv2: y = (Dx)_alpha is strictly positive and
/// (D M D)|alpha y <= 0.
struct NormalizedPV2 {
  Signature d;
  IndexSet alpha;
  RatVector y;
};

NormalizedPV2 normalize_pv2(const RatMatrix& m, const RatVector& x);

/// One application of reduce_i.
struct ReductionStep {
  std::size_t i = 0;
  Rational theta;  ///< > 0
  RatVector y;     ///< >= 0, with a zero at the arg-min coordinate
};

/// y = x - theta A^{-1}_{.i}, theta = min over j with A^{-1}_{ji} > 0 of
/// x_j / A^{-1}_{ji} (smallest j on ties). Requires x > 0.
/// Throws NoPositiveEntryError or SingularError.
ReductionStep reduce_at(const RatMatrix& a, const RatVector& x, std::size_t i);

/// Work counters of the recursive minor search.
struct MinorSearchStats {
  std::size_t depth = 0;          ///< recursive calls made
  std::size_t determinants = 0;   ///< principal minors evaluated
};

/// Returns beta with det(M|beta) <= 0. Throws NotAWitnessError.
IndexSet pv2_to_pv1(const RatMatrix& m, const RatVector& x, MinorSearchStats* stats = nullptr);

// -- Non-positive minor -> failed unique sink orientation -----------------------

struct ZeroMinor {
  IndexSet alpha;
};
/// det(M|alpha) < 0 and det(M|alpha - i) > 0.
struct NegativeWithPositiveSub {
  IndexSet alpha;
  std::size_t i = 0;
};
using MinimalMinorResult = std::variant<ZeroMinor, NegativeWithPositiveSub>;

/// Descends from alpha one element at a time. Throws NotAWitnessError.
MinimalMinorResult minimal_witness(const RatMatrix& m, const IndexSet& alpha);

/// q_i = 2^{-4 i sigma} with i 1-based and sigma = bit_size(M).
RatVector nondegenerate_q(const RatMatrix& m);

/// Returns a PV3Singular or PV3TwoSinks witness. Throws NotAWitnessError.
Witness pv1_to_pv3(const RatMatrix& m, const IndexSet& alpha);

// -- Failed unique sink orientation -> non-positive minor -----------------------

/// A two-sinks instance restricted to the face spanned by alpha and beta.
/// `matrix` is the Schur complement of M|S in M|T (S = alpha & beta,
/// T = alpha | beta) and `index` maps its rows back to [n]. A subset gamma
/// with det(matrix|gamma) <= 0 lifts to S | index(gamma) for M.
struct FaceReduction {
  RatMatrix matrix;
  RatVector q;
  IndexSet alpha;
  IndexSet beta;
  IndexSet pivoted;                 ///< S, in M's indexing
  std::vector<std::size_t> index;   ///< reduced coordinate -> original coordinate

  /// S | index(gamma)
  IndexSet lift(const IndexSet& gamma) const;
};

/// Either the reduced instance, or S itself when det(M|S) <= 0.
using FaceEliminationResult = std::variant<FaceReduction, IndexSet>;

FaceEliminationResult eliminate_face(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                                     const IndexSet& beta);

/// Signature change making both outmaps all-ones.
struct SinkNormalization {
  Signature d;
  RatMatrix matrix;  ///< D M D
  RatVector q;       ///< D q
};

/// Requires alpha & beta empty and alpha | beta = [n]. Throws
/// DegenerateWitnessError if C^{-1}q has a zero entry for either vertex.
SinkNormalization normalize_sinks(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                                  const IndexSet& beta);

/// One step of the sink walk: beta moves one coordinate towards alpha.
struct SinkStep {
  std::size_t pivot = 0;    ///< i in alpha \ beta used to build v
  std::size_t flipped = 0;  ///< coordinate j with new beta = beta (+) {j}
  IndexSet beta;            ///< the new sink
  RatVector q;              ///< q' with alpha and beta both sinks
  Rational c;               ///< multiplier on the shared-column vector
  Rational t;               ///< step length along v
  Rational eps;             ///< final perturbation size
};

/// Requires alpha, beta both sinks (C^{-1}q > 0) and alpha \ beta non-empty.
/// Throws PreconditionViolatedError carrying the first subset among alpha,
/// beta, beta (+) {j} (j in alpha (+) beta) whose principal minor is <= 0.
SinkStep step_sink(const RatMatrix& m, const RatVector& q, const IndexSet& alpha, const IndexSet& beta);

struct SinkWalkStats {
  std::size_t steps = 0;
  std::size_t swaps = 0;
};

/// Returns gamma with det(M|gamma) <= 0 given two distinct sinks.
IndexSet two_sinks_to_minor(const RatMatrix& m, const RatVector& q, const IndexSet& alpha,
                            const IndexSet& beta, SinkWalkStats* stats = nullptr);

/// Returns alpha with det(M|alpha) <= 0. Throws NotAWitnessError and
/// DegenerateWitnessError.
IndexSet pv3_to_pv1(const RatMatrix& m, const Witness& w, SinkWalkStats* stats = nullptr);

// -- Dispatch ------------------------------------------------------------------

enum class Pv2Method { Exact, Eigen };

struct ConvertOptions {
  Pv2Method pv2_method = Pv2Method::Exact;
  EigenOptions eigen;
};

/// Converts any verified witness to the requested kind, composing through
/// PV1 when needed. Identity conversions return the input. Each intermediate
/// witness (including the input) is passed to `trace` when set.
Witness convert_witness(const RatMatrix& m, const Witness& w, WitnessKind target,
                        const ConvertOptions& options = {},
                        const std::function<void(const Witness&)>& trace = {});

}  // namespace pw
