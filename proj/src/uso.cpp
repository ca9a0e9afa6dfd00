#include "pwitness/uso.hpp"

#include <algorithm>
#include <cassert>

#include "pwitness/errors.hpp"
#include "pwitness/kernels.hpp"

namespace pw {

OrientationTable::OrientationTable(std::size_t n, std::vector<Mask> out) : n_(n), out_(std::move(out)) {
  assert(out_.size() == (std::size_t{1} << n));
  for (auto& o : out_) o &= IndexSet::full_mask(n);
}

OrientationTable OrientationTable::reversed() const {
  std::vector<Mask> r(out_);
  for (auto& o : r) o = ~o;
  return OrientationTable(n_, std::move(r));
}

std::string OrientationTable::dump() const {
  std::string s;
  for (auto a : cube_order(n_)) {
    s += IndexSet(n_, a).to_bits();
    s += ' ';
    s += IndexSet(n_, out_[a]).to_bits();
    s += '\n';
  }
  return s;
}

OrientationTable lcp_orientation(const RatMatrix& m, const RatVector& q, const Limits& limits) {
  const std::size_t n = m.size();
  enforce_cap(n, limits.subsets);
  const auto signs = kernels::basis_signs(m, q, Backend::OpenMP);
  for (auto a : cube_order(n))
    if (signs[a].singular) throw SingularCompError(IndexSet(n, a));
  std::vector<OrientationTable::Mask> out(signs.size());
  std::transform(signs.begin(), signs.end(), out.begin(), [](const kernels::BasisSigns& s) { return s.positive; });
  return OrientationTable(n, std::move(out));
}

std::optional<UsoCounterExample> check_uso(const OrientationTable& t, const Limits& limits) {
  const std::size_t n = t.dimension();
  enforce_cap(n, limits.pairs);
  const auto pair = kernels::first_outmap_violation(n, t.raw(), Backend::OpenMP);
  if (!pair) return std::nullopt;
  return UsoCounterExample{IndexSet(n, pair->first), IndexSet(n, pair->second)};
}

std::vector<IndexSet> face_sinks(const OrientationTable& t, const Face& f) {
  const std::size_t n = t.dimension();
  assert(f.s.is_subset_of(f.t));
  const auto free = (f.t - f.s).bits();
  std::vector<IndexSet> sinks;
  for (auto a : cube_order(n)) {
    if ((a & f.s.bits()) != f.s.bits() || (a & ~f.t.bits()) != 0) continue;
    if ((t.raw()[a] & free) == 0) sinks.emplace_back(n, a);
  }
  return sinks;
}

bool is_uso(const OrientationTable& t, const Limits& limits) {
  enforce_cap(t.dimension(), limits.faces);
  return kernels::scan_faces(t.dimension(), t.raw(), Backend::OpenMP).bad_faces == 0;
}

OrientationTable linear_orientation(const RatVector& c, const Limits& limits) {
  const std::size_t n = c.size();
  enforce_cap(n, limits.subsets);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(c[i]) == 0) throw DegenerateObjectiveError(i);
  // Adding i raises f iff c_i > 0; removing it raises f iff c_i < 0.
  IndexSet::Mask negative = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(c[i]) < 0) negative |= IndexSet::bit(i);
  std::vector<OrientationTable::Mask> out(std::size_t{1} << n);
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = ~(a ^ negative);
  return OrientationTable(n, std::move(out));
}

LCPResult lcp_solve_bruteforce(const RatMatrix& m, const RatVector& q, const Limits& limits) {
  const std::size_t n = m.size();
  enforce_cap(n, limits.subsets);
  const auto signs = kernels::basis_signs(m, q, Backend::OpenMP);
  const IndexSet::Mask full = IndexSet::full_mask(n);
  LCPResult r;
  for (auto a : cube_order(n)) {
    const auto& s = signs[a];
    if (s.singular) {
      r.singular.emplace_back(n, a);
      continue;
    }
    if ((s.positive | s.zero) != full) continue;
    const IndexSet alpha(n, a);
    const RatVector u = comp_solve(m, alpha, q);
    LCPSolution sol{alpha, RatVector(n), RatVector(n)};
    for (std::size_t i = 0; i < n; ++i) (alpha.contains(i) ? sol.z : sol.w)[i] = u[i];
    const bool dup = std::any_of(r.solutions.begin(), r.solutions.end(),
                                 [&](const LCPSolution& o) { return o.w == sol.w && o.z == sol.z; });
    if (!dup) r.solutions.push_back(std::move(sol));
  }
  return r;
}

}  // namespace pw
