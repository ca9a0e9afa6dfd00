#include <omp.h>

#include "kernels_impl.hpp"
#include "pwitness/core.hpp"
#include "pwitness/errors.hpp"

namespace pw {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

namespace kernels {

namespace detail {

BasisSigns signs_of(const RatMatrix& m, const RatVector& q, Mask alpha) {
  BasisSigns s;
  RatVector u;
  try {
    u = comp_solve(m, IndexSet(m.size(), alpha), q);
  } catch (const SingularCompError&) {
    s.singular = true;
    return s;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int sg = sgn(u[i]);
    if (sg > 0) s.positive |= IndexSet::bit(i);
    if (sg == 0) s.zero |= IndexSet::bit(i);
  }
  return s;
}

std::uint64_t face_sink_count(std::span<const Mask> out, Mask s, Mask t) {
  const Mask free = t & ~s;
  std::uint64_t sinks = 0;
  // Walk every submask of `free`, including 0.
  Mask sub = free;
  while (true) {
    if ((out[s | sub] & free) == 0) ++sinks;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return sinks;
}

}  // namespace detail

std::optional<Mask> first_nonpositive_minor(const RatMatrix& m, Backend backend) {
  return backend == Backend::Serial ? serial::first_nonpositive_minor(m)
                                    : openmp::first_nonpositive_minor(m);
}

std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q, Backend backend) {
  return backend == Backend::Serial ? serial::basis_signs(m, q) : openmp::basis_signs(m, q);
}

std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out,
                                                            Backend backend) {
  return backend == Backend::Serial ? serial::first_outmap_violation(n, out)
                                    : openmp::first_outmap_violation(n, out);
}

FaceScan scan_faces(std::size_t n, std::span<const Mask> out, Backend backend) {
  return backend == Backend::Serial ? serial::scan_faces(n, out) : openmp::scan_faces(n, out);
}

}  // namespace kernels
}  // namespace pw
