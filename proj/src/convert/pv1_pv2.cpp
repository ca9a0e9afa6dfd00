#include <algorithm>

#include "check.hpp"
#include "pwitness/convert.hpp"

namespace pw {

RatVector pv1_to_pv2(const RatMatrix& m, const IndexSet& alpha) {
  if (alpha.dimension() != m.size() || alpha.is_empty()) throw NotAWitnessError("empty or mis-sized subset");
  IndexSet a = alpha;
  Rational d = principal_minor(m, a);
  if (sgn(d) > 0) throw NotAWitnessError("det(M|alpha) > 0");

  RatVector x;
  while (true) {
    if (sgn(d) == 0) {
      x = pad_vector(kernel_vector(principal_submatrix(m, a)), a);
      break;
    }
    bool shrunk = false;
    for (auto i : a.members()) {
      Rational di = principal_minor(m, a.without(i));
      if (sgn(di) <= 0) {
        a = a.without(i);
        d = std::move(di);
        shrunk = true;
        break;
      }
    }
    if (!shrunk) {
      // (M|a) xhat = -e_j, and xhat_j = -det(M|a-j)/det(M|a) > 0.
      RatVector col = inverse_column(principal_submatrix(m, a), 0);
      x = pad_vector(Rational(-1) * col, a);
      break;
    }
  }
  PW_ENSURE(verify_pv2(m, PV2{x}), "pv1_to_pv2 produced a vector that is not sign-reversing");
  return x;
}

NormalizedPV2 normalize_pv2(const RatMatrix& m, const RatVector& x) {
  if (!verify_pv2(m, PV2{x})) throw NotAWitnessError("x is not a sign-reversing vector");
  const std::size_t n = m.size();
  IndexSet neg(n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) < 0) neg = neg.with(i);
  NormalizedPV2 r{Signature{neg}, IndexSet(n), {}};
  const RatVector dx = r.d.apply(x);
  r.alpha = positive_support(dx);
  r.y = restrict_vector(dx, r.alpha);

  const RatVector by = principal_submatrix(r.d.conjugate(m), r.alpha) * r.y;
  PW_ENSURE(std::all_of(by.begin(), by.end(), [](const Rational& v) { return sgn(v) <= 0; }),
            "normalized vector is not sign-reversing on its support");
  return r;
}

ReductionStep reduce_at(const RatMatrix& a, const RatVector& x, std::size_t i) {
  if (x.size() != a.size() || std::any_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) <= 0; }))
    throw NotAWitnessError("reduce_at needs a strictly positive vector");
  const RatVector col = inverse_column(a, i);

  // Ratio is x_j / A^{-1}_{ji}, numerator indexed by j. With x_i on top
  // theta would not depend on the arg-min and y >= 0 could fail.
  std::optional<std::size_t> argmin;
  Rational theta;
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (sgn(col[j]) <= 0) continue;
    Rational r = x[j] / col[j];
    if (!argmin || r < theta) {
      theta = std::move(r);
      argmin = j;
    }
  }
  if (!argmin) throw NoPositiveEntryError(i);

  ReductionStep step{i, theta, x - theta * col};
  PW_ENSURE(sgn(step.y[*argmin]) == 0, "reduction did not zero the arg-min coordinate");
  PW_ENSURE(std::all_of(step.y.begin(), step.y.end(), [](const Rational& v) { return sgn(v) >= 0; }),
            "reduction produced a negative coordinate");
  return step;
}

namespace {

// RecursiveFindNonpositiveMinor on B = DMD. `y` is strictly positive and
// indexed by the members of alpha.
IndexSet find_nonpositive_minor(const RatMatrix& b, const IndexSet& alpha, RatVector y,
                                MinorSearchStats& stats) {
  ++stats.depth;
  if (alpha.size() == 1) return alpha;
  ++stats.determinants;
  if (sgn(principal_minor(b, alpha)) <= 0) return alpha;

  const auto members = alpha.members();
  const RatMatrix a = principal_submatrix(b, alpha);
  std::optional<RatVector> chosen;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const IndexSet smaller = alpha.without(members[k]);
    ++stats.determinants;
    if (sgn(principal_minor(b, smaller)) <= 0) return smaller;
    // det(A) > 0 and det(A|[n]-k) > 0 make (A^{-1})_kk positive, so the
    // reduction is always defined here.
    ReductionStep step = reduce_at(a, y, k);
    const RatVector ay = a * step.y;
    PW_ENSURE(std::all_of(ay.begin(), ay.end(), [](const Rational& v) { return sgn(v) <= 0; }),
              "reduced vector is not sign-reversing");
    if (!chosen && !is_zero(step.y)) chosen = std::move(step.y);
  }
  PW_ENSURE(chosen.has_value(), "every reduction collapsed to the zero vector");

  const IndexSet local = positive_support(*chosen);
  IndexSet beta(alpha.dimension());
  for (auto k : local.members()) beta = beta.with(members[k]);
  PW_ENSURE(beta.size() < alpha.size() && !beta.is_empty(), "support did not shrink");
  return find_nonpositive_minor(b, beta, restrict_vector(*chosen, local), stats);
}

}  // namespace

IndexSet pv2_to_pv1(const RatMatrix& m, const RatVector& x, MinorSearchStats* stats) {
  const NormalizedPV2 norm = normalize_pv2(m, x);
  MinorSearchStats local;
  const IndexSet beta = find_nonpositive_minor(norm.d.conjugate(m), norm.alpha, norm.y, local);
  if (stats) *stats = local;
  // Signature conjugation leaves principal minors unchanged.
  PW_ENSURE(verify_pv1(m, PV1{beta}), "pv2_to_pv1 produced a positive minor");
  return beta;
}

}  // namespace pw
