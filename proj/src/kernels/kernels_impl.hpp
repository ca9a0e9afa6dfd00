#pragma once

#include "pwitness/kernels.hpp"

namespace pw::kernels {

// Helpers shared by both backends.
namespace detail {

/// Sign data for a single basis.
BasisSigns signs_of(const RatMatrix& m, const RatVector& q, Mask alpha);

/// Number of sinks of face [s, t].
std::uint64_t face_sink_count(std::span<const Mask> out, Mask s, Mask t);

inline bool violates(std::span<const Mask> out, Mask a, Mask b) {
  return ((a ^ b) & (out[a] ^ out[b])) == 0;
}

}  // namespace detail

namespace serial {
std::optional<Mask> first_nonpositive_minor(const RatMatrix& m);
std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q);
std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out);
FaceScan scan_faces(std::size_t n, std::span<const Mask> out);
}  // namespace serial

namespace openmp {
std::optional<Mask> first_nonpositive_minor(const RatMatrix& m);
std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q);
std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out);
FaceScan scan_faces(std::size_t n, std::span<const Mask> out);
}  // namespace openmp

}  // namespace pw::kernels
