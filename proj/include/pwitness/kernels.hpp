#pragma once

// Exhaustive enumeration kernels over subsets, faces and subset pairs.
//
// Every kernel comes in two backends that must return identical results:
// a straightforward serial loop kept as the reference, and an OpenMP
// version that distributes the outer loop. Results never depend on the
// schedule; "first" always refers to the documented enumeration order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pwitness/index_set.hpp"
#include "pwitness/ratmat.hpp"

namespace pw {

enum class Backend { Serial, OpenMP };

/// Sets the OpenMP thread count used by Backend::OpenMP (0 = runtime default).
void set_threads(int threads);
int max_threads();

namespace kernels {

using Mask = IndexSet::Mask;

/// First non-empty alpha in size-then-lex order with det(M|alpha) <= 0.
std::optional<Mask> first_nonpositive_minor(const RatMatrix& m, Backend backend);

/// Sign data of C_alpha(M)^{-1} q for one basis alpha.
struct BasisSigns {
  bool singular = false;
  Mask positive = 0;  ///< coordinates with entry > 0
  Mask zero = 0;      ///< coordinates with entry == 0
};

/// Sign data for every alpha, indexed by the subset mask.
std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q, Backend backend);

/// Lex-first pair (alpha, beta), alpha before beta in cube order, with
/// (alpha ^ beta) & (out[alpha] ^ out[beta]) == 0. `out` is indexed by mask.
std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out,
                                                            Backend backend);

struct FaceScan {
  std::uint64_t faces = 0;       ///< number of faces [S,T] visited, 3^n
  std::uint64_t bad_faces = 0;   ///< faces without exactly one sink
};

/// Counts, for every face [S,T], the vertices with no outgoing edge inside
/// the face, and reports how many faces do not have exactly one.
FaceScan scan_faces(std::size_t n, std::span<const Mask> out, Backend backend);

}  // namespace kernels
}  // namespace pw
