// Reference implementations: plain loops in enumeration order.

#include "kernels_impl.hpp"
#include "pwitness/core.hpp"

namespace pw::kernels::serial {

std::optional<Mask> first_nonpositive_minor(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 1; k <= n; ++k)
    for (Mask a : combinations(n, k))
      if (sgn(principal_minor(m, IndexSet(n, a))) <= 0) return a;
  return std::nullopt;
}

std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q) {
  const std::size_t count = std::size_t{1} << m.size();
  std::vector<BasisSigns> out(count);
  for (std::size_t a = 0; a < count; ++a) out[a] = detail::signs_of(m, q, a);
  return out;
}

std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out) {
  const auto order = cube_order(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (detail::violates(out, order[i], order[j])) return std::make_pair(order[i], order[j]);
  return std::nullopt;
}

FaceScan scan_faces(std::size_t n, std::span<const Mask> out) {
  FaceScan scan;
  const Mask full = IndexSet::full_mask(n);
  for (Mask t = 0;; ++t) {
    Mask s = t;
    while (true) {
      ++scan.faces;
      if (detail::face_sink_count(out, s, t) != 1) ++scan.bad_faces;
      if (s == 0) break;
      s = (s - 1) & t;
    }
    if (t == full) break;
  }
  return scan;
}

}  // namespace pw::kernels::serial
