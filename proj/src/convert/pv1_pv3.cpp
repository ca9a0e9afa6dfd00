#include "check.hpp"
#include "pwitness/convert.hpp"

namespace pw {

MinimalMinorResult minimal_witness(const RatMatrix& m, const IndexSet& alpha) {
  if (alpha.dimension() != m.size() || alpha.is_empty()) throw NotAWitnessError("empty or mis-sized subset");
  IndexSet a = alpha;
  Rational d = principal_minor(m, a);
  if (sgn(d) > 0) throw NotAWitnessError("det(M|alpha) > 0");

  while (true) {
    if (sgn(d) == 0) return ZeroMinor{a};
    // det(M|empty) = 1 > 0
    if (a.size() == 1) return NegativeWithPositiveSub{a, a.front()};
    for (auto i : a.members()) {
      const Rational di = principal_minor(m, a.without(i));
      if (sgn(di) == 0) return ZeroMinor{a.without(i)};
      if (sgn(di) > 0) return NegativeWithPositiveSub{a, i};
    }
    // Every co-dimension-1 minor is negative; descend.
    a = a.without(a.front());
    d = principal_minor(m, a);
  }
}

RatVector nondegenerate_q(const RatMatrix& m) {
  const std::size_t sigma = bit_size(m);
  RatVector q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_class den = 1;
    den <<= 4 * (i + 1) * sigma;
    q[i] = Rational(mpz_class(1), den);
  }
  return q;
}

namespace {

std::optional<IndexSet> first_zero_minor(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t k = 1; k <= n; ++k)
    for (auto a : combinations(n, k))
      if (sgn(principal_minor(m, IndexSet(n, a))) == 0) return IndexSet(n, a);
  return std::nullopt;
}

}  // namespace

Witness pv1_to_pv3(const RatMatrix& m, const IndexSet& alpha) {
  if (!verify_pv1(m, PV1{alpha})) throw NotAWitnessError("det(M|alpha) > 0");

  const MinimalMinorResult mw = minimal_witness(m, alpha);
  if (const auto* z = std::get_if<ZeroMinor>(&mw)) {
    // det(C_alpha) = (-1)^|alpha| det(M|alpha) = 0
    Witness w = PV3Singular{z->alpha};
    PW_ENSURE(verify_witness(m, w), "zero minor does not give a singular complementary matrix");
    return w;
  }

  const auto& neg = std::get<NegativeWithPositiveSub>(mw);
  // By Cramer's rule (C_a^{-1}q)_i / (C_b^{-1}q)_i = -det(M|b)/det(M|a) > 0
  // for b = a - i, so both outmaps agree at the single coordinate where the
  // vertices differ.
  Witness w = PV3TwoSinks{nondegenerate_q(m), neg.alpha, neg.alpha.without(neg.i)};
  if (verify_witness(m, w)) return w;

  // Only reachable if C_alpha or C_beta were singular, i.e. M degenerate.
  if (auto z = first_zero_minor(m)) return PV3Singular{*z};
  throw InternalError("pv1_to_pv3 could not build a verified witness");
}

}  // namespace pw
