#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pwitness/core.hpp"
#include "pwitness/index_set.hpp"
#include "pwitness/limits.hpp"
#include "pwitness/ratmat.hpp"

namespace pw {

/// The face [S,T] = {alpha : S <= alpha <= T} of the n-cube.
struct Face {
  IndexSet s;
  IndexSet t;
};

/// Outmap of every vertex of the n-cube. Bit i of out(alpha) set means the
/// edge {alpha, alpha (+) {i}} is directed away from alpha.
class OrientationTable {
 public:
  using Mask = IndexSet::Mask;

  OrientationTable() = default;
  /// `out` is indexed by subset mask and must have 2^n entries.
  OrientationTable(std::size_t n, std::vector<Mask> out);

  std::size_t dimension() const noexcept { return n_; }
  Outmap at(const IndexSet& alpha) const { return Outmap(IndexSet(n_, out_[alpha.bits()])); }
  std::span<const Mask> raw() const noexcept { return out_; }

  /// Every edge flipped: each outmap complemented.
  OrientationTable reversed() const;

  /// One line per subset in cube order: "<subset-bits> <outmap-bits>".
  std::string dump() const;

  friend bool operator==(const OrientationTable&, const OrientationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Mask> out_;
};

/// alpha -> psi_q(alpha, M) for every alpha. Throws SingularCompError for the
/// first singular C_alpha in cube order, TooLargeError above limits.subsets.
///
/// The LCP edge rule points {alpha, beta} at beta when (C_beta^{-1} q)_i > 0,
/// i.e. its outmaps are the complements of psi. reversed() converts between
/// the two; the LCP solutions are the sinks of the reversed table.
OrientationTable lcp_orientation(const RatMatrix& m, const RatVector& q, const Limits& limits = {});

struct UsoCounterExample {
  IndexSet alpha;
  IndexSet beta;
};

/// Checks (alpha (+) beta) & (out(alpha) (+) out(beta)) != 0 for all pairs.
/// Returns the lex-first violating pair in cube order, or nullopt.
/// Throws TooLargeError above limits.pairs.
std::optional<UsoCounterExample> check_uso(const OrientationTable& t, const Limits& limits = {});

/// Vertices of the face with no outgoing edge inside it.
std::vector<IndexSet> face_sinks(const OrientationTable& t, const Face& f);

/// True iff every one of the 3^n faces has exactly one sink.
/// Throws TooLargeError above limits.faces.
bool is_uso(const OrientationTable& t, const Limits& limits = {});

/// Orientation of the cube induced by f(alpha) = sum_{j in alpha} c_j, edges
/// pointing towards larger f. Throws DegenerateObjectiveError if some c_i = 0.
OrientationTable linear_orientation(const RatVector& c, const Limits& limits = {});

/// w - Mz = q, w, z >= 0, w.z = 0; z lives on alpha and w on its complement.
struct LCPSolution {
  IndexSet alpha;
  RatVector w;
  RatVector z;
};

struct LCPResult {
  std::vector<LCPSolution> solutions;  ///< distinct (w, z), first basis in cube order
  std::vector<IndexSet> singular;      ///< bases with singular C_alpha, skipped
};

/// Enumerates all complementary bases. Throws TooLargeError above
/// limits.subsets.
LCPResult lcp_solve_bruteforce(const RatMatrix& m, const RatVector& q, const Limits& limits = {});

}  // namespace pw
