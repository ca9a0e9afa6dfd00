#include <algorithm>
#include <array>

#include "check.hpp"
#include "pwitness/convert.hpp"

namespace pw {

std::vector<Rational> characteristic_polynomial(const RatMatrix& a) {
  const std::size_t k = a.size();
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  RatMatrix acc(k);  // M_0 = 0
  for (std::size_t m = 1; m <= k; ++m) {
    acc = a * acc;
    for (std::size_t i = 0; i < k; ++i) acc(i, i) += c[k - m + 1];
    const RatMatrix am = a * acc;
    Rational tr = 0;
    for (std::size_t i = 0; i < k; ++i) tr += am(i, i);
    c[k - m] = -tr / m;
  }
  return c;
}

namespace {

Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

// Nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& x, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  const Rational shifted = x * scale + Rational(1, 2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational r(fl, scale);
  r.canonicalize();
  return r;
}

RatVector round_dyadic(const RatVector& x, unsigned bits) {
  RatVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = round_dyadic(x[i], bits);
  return r;
}

// Scales x so that its first largest-magnitude entry is exactly 1.
void normalize_max(RatVector& x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (abs(x[i]) > abs(x[best])) best = i;
  const Rational s = 1 / x[best];
  for (auto& v : x) v *= s;
}

}  // namespace

RatVector pv1_to_pv2_eigen(const RatMatrix& m, const IndexSet& alpha, const EigenOptions& options) {
  if (alpha.dimension() != m.size() || alpha.is_empty()) throw NotAWitnessError("empty or mis-sized subset");
  const RatMatrix a = principal_submatrix(m, alpha);
  if (sgn(det(a)) >= 0) throw NotAWitnessError("eigen route needs det(M|alpha) < 0");
  const std::size_t k = a.size();

  // det(lambda I - A) is monic; at 0 it equals (-1)^k det(A), and beyond the
  // Cauchy bound it has the sign of lambda^k, so [-R, 0] brackets a root.
  const auto poly = characteristic_polynomial(a);
  Rational bound = 0;
  for (std::size_t j = 0; j < k; ++j) bound = std::max(bound, Rational(abs(poly[j])));
  Rational lo = -(bound + 1), hi = 0;
  const int sign_lo = sgn(evaluate(poly, lo));
  bool exact_root = false;
  for (std::size_t s = 0; s < options.bisection_steps; ++s) {
    const Rational mid = (lo + hi) / 2;
    const int sm = sgn(evaluate(poly, mid));
    if (sm == 0) {
      lo = hi = mid;
      exact_root = true;
      break;
    }
    (sm == sign_lo ? lo : hi) = mid;
  }
  const Rational shift = (lo + hi) / 2;
  RatMatrix shifted = a;
  for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= shift;

  auto accept = [&](RatVector cand) -> std::optional<RatVector> {
    if (is_zero(cand)) return std::nullopt;
    normalize_max(cand);
    if (!verify_pv2(a, PV2{cand})) return std::nullopt;
    return pad_vector(cand, alpha);
  };

  if (exact_root) {
    if (auto r = accept(kernel_vector(shifted))) return *r;
    throw InternalError("exact eigenvector is not sign-reversing");
  }

  static constexpr std::array<unsigned, 5> kPrecisions{8, 16, 32, 48, 64};
  static constexpr std::size_t kSweepsPerStart = 8;
  // An exact start vector can miss the target eigenvector entirely (all-ones on
  // [[0,2],[2,0]]), so restart from each unit vector when one stalls.
  std::vector<RatVector> starts{RatVector(k)};
  for (std::size_t i = 0; i < k; ++i) starts[0][i] = Rational(1, i + 1);
  for (std::size_t i = 0; i < k; ++i) starts.push_back(unit_vector(k, i));
  std::size_t sweeps = 0;
  for (const auto& start : starts) {
    RatVector x = start;
    for (std::size_t s = 0; s < kSweepsPerStart && sweeps < options.max_sweeps; ++s, ++sweeps) {
      try {
        x = solve(shifted, x);
      } catch (const SingularError&) {
        // The shift landed on the eigenvalue itself.
        if (auto r = accept(kernel_vector(shifted))) return *r;
        throw InternalError("exact eigenvector is not sign-reversing");
      }
      normalize_max(x);
      // Coarse roundings first: they give the shortest witness.
      for (auto bits : kPrecisions)
        if (auto r = accept(round_dyadic(x, bits))) return *r;
      if (auto r = accept(x)) return *r;
      // Inverse iteration is self-correcting, so truncation only bounds growth.
      x = round_dyadic(x, 128);
    }
  }
  throw IterationLimitError(options.max_sweeps);
}

}  // namespace pw
