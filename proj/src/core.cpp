#include "pwitness/core.hpp"

#include <cassert>

#include "pwitness/errors.hpp"
#include "pwitness/kernels.hpp"

namespace pw {

void enforce_cap(std::size_t n, std::size_t cap) {
  if (n > cap || n >= kMaxDimension) throw TooLargeError(n, cap);
}

RatMatrix principal_submatrix(const RatMatrix& m, const IndexSet& alpha) {
  return submatrix(m, alpha, alpha);
}

Rational principal_minor(const RatMatrix& m, const IndexSet& alpha) {
  return det(principal_submatrix(m, alpha));
}

RatMatrix comp_matrix(const RatMatrix& m, const IndexSet& alpha) {
  const std::size_t n = m.size();
  RatMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha.contains(j)) {
      for (std::size_t i = 0; i < n; ++i) c(i, j) = -m(i, j);
    } else {
      c(j, j) = 1;
    }
  }
  return c;
}

RatVector comp_solve(const RatMatrix& m, const IndexSet& alpha, const RatVector& q) {
  try {
    return solve(comp_matrix(m, alpha), q);
  } catch (const SingularError&) {
    throw SingularCompError(alpha);
  }
}

Outmap sign_pattern(const RatVector& u) { return Outmap(positive_support(u)); }

Outmap outmap(const RatMatrix& m, const IndexSet& alpha, const RatVector& q) {
  return sign_pattern(comp_solve(m, alpha, q));
}

PTestResult is_p_matrix(const RatMatrix& m, const Limits& limits) {
  enforce_cap(m.size(), limits.subsets);
  PTestResult r;
  if (auto a = kernels::first_nonpositive_minor(m, Backend::OpenMP)) r.violation = IndexSet(m.size(), *a);
  return r;
}

bool is_nondegenerate_q(const RatMatrix& m, const RatVector& q, const Limits& limits) {
  const std::size_t n = m.size();
  enforce_cap(n, limits.subsets);
  assert(q.size() == n);
  const auto signs = kernels::basis_signs(m, q, Backend::OpenMP);
  for (auto a : cube_order(n))
    if (signs[a].singular) throw SingularCompError(IndexSet(n, a));
  for (const auto& s : signs)
    if (s.zero != 0) return false;
  return true;
}

WitnessKind kind_of(const Witness& w) {
  switch (w.index()) {
    case 0: return WitnessKind::PV1;
    case 1: return WitnessKind::PV2;
    default: return WitnessKind::PV3;
  }
}

std::string tag_of(const Witness& w) {
  switch (w.index()) {
    case 0: return "PV1";
    case 1: return "PV2";
    case 2: return "PV3SING";
    default: return "PV3SINKS";
  }
}

bool verify_pv1(const RatMatrix& m, const PV1& w) {
  if (w.alpha.dimension() != m.size()) return false;
  return sgn(principal_minor(m, w.alpha)) <= 0;
}

bool verify_pv2(const RatMatrix& m, const PV2& w) {
  if (w.x.size() != m.size() || is_zero(w.x)) return false;
  const RatVector mx = m * w.x;
  for (std::size_t i = 0; i < mx.size(); ++i)
    if (sgn(w.x[i]) * sgn(mx[i]) > 0) return false;
  return true;
}

bool verify_pv3(const RatMatrix& m, const PV3Singular& w) {
  if (w.alpha.dimension() != m.size()) return false;
  return sgn(det(comp_matrix(m, w.alpha))) == 0;
}

bool verify_pv3(const RatMatrix& m, const PV3TwoSinks& w) {
  const std::size_t n = m.size();
  if (w.q.size() != n || w.alpha.dimension() != n || w.beta.dimension() != n) return false;
  if (w.alpha == w.beta) return false;
  Outmap oa, ob;
  try {
    oa = outmap(m, w.alpha, w.q);
    ob = outmap(m, w.beta, w.q);
  } catch (const SingularCompError&) {
    return false;
  }
  return ((w.alpha ^ w.beta) & (oa ^ ob).outdir()).is_empty();
}

bool verify_witness(const RatMatrix& m, const Witness& w) {
  return std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PV1>) return verify_pv1(m, v);
        else if constexpr (std::is_same_v<T, PV2>) return verify_pv2(m, v);
        else return verify_pv3(m, v);
      },
      w);
}

RatMatrix Signature::conjugate(const RatMatrix& m) const {
  RatMatrix r(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (entry(i) * entry(j) < 0) r(i, j) = -r(i, j);
  return r;
}

RatVector Signature::apply(const RatVector& x) const {
  RatVector y(x);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (negated.contains(i)) y[i] = -y[i];
  return y;
}

}  // namespace pw
