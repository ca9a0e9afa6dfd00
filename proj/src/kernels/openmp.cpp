// OpenMP kernels. Each parallel loop writes into per-index slots or reduces
// with min over enumeration positions, so the result matches the serial
// reference whatever the schedule.

#include <cstdint>
#include <limits>

#include "kernels_impl.hpp"
#include "pwitness/core.hpp"

namespace pw::kernels::openmp {

std::optional<Mask> first_nonpositive_minor(const RatMatrix& m) {
  const std::size_t n = m.size();
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto level = combinations(n, k);
    const auto count = static_cast<std::int64_t>(level.size());
    std::int64_t best = kNone;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t r = 0; r < count; ++r) {
      if (r >= best) continue;
      if (sgn(principal_minor(m, IndexSet(n, level[static_cast<std::size_t>(r)]))) <= 0) best = r;
    }
    if (best != kNone) return level[static_cast<std::size_t>(best)];
  }
  return std::nullopt;
}

std::vector<BasisSigns> basis_signs(const RatMatrix& m, const RatVector& q) {
  const auto count = static_cast<std::int64_t>(std::size_t{1} << m.size());
  std::vector<BasisSigns> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < count; ++a)
    out[static_cast<std::size_t>(a)] = detail::signs_of(m, q, static_cast<Mask>(a));
  return out;
}

std::optional<std::pair<Mask, Mask>> first_outmap_violation(std::size_t n, std::span<const Mask> out) {
  const auto order = cube_order(n);
  const auto count = static_cast<std::int64_t>(order.size());
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  // Rows are ranked lexicographically, so the lex-first pair lives in the
  // smallest row that has any violation, at that row's first column.
  std::int64_t best_row = kNone;
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best_row)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i >= best_row) continue;
    for (std::int64_t j = i + 1; j < count; ++j) {
      if (detail::violates(out, order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
        best_row = i;
        break;
      }
    }
  }
  if (best_row == kNone) return std::nullopt;
  const Mask a = order[static_cast<std::size_t>(best_row)];
  for (std::int64_t j = best_row + 1; j < count; ++j)
    if (detail::violates(out, a, order[static_cast<std::size_t>(j)]))
      return std::make_pair(a, order[static_cast<std::size_t>(j)]);
  return std::nullopt;
}

FaceScan scan_faces(std::size_t n, std::span<const Mask> out) {
  const auto count = static_cast<std::int64_t>(std::size_t{1} << n);
  std::uint64_t faces = 0;
  std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : faces, bad)
  for (std::int64_t ti = 0; ti < count; ++ti) {
    const auto t = static_cast<Mask>(ti);
    Mask s = t;
    while (true) {
      ++faces;
      if (detail::face_sink_count(out, s, t) != 1) ++bad;
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return FaceScan{faces, bad};
}

}  // namespace pw::kernels::openmp
