#include <gtest/gtest.h>

#include "pwitness/convert.hpp"
#include "pwitness/errors.hpp"
#include "support.hpp"

using namespace pw;

namespace {

const RatMatrix kA12{{1, 2}, {2, 1}};
const RatMatrix kOnes{{1, 1}, {1, 1}};
const RatMatrix kNeg{{-1}};

Rational q(long p, unsigned long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Pv1ToPv2, Examples) {
  EXPECT_EQ(pv1_to_pv2(kNeg, IndexSet::full(1)), (RatVector{1}));
  EXPECT_EQ(pv1_to_pv2(kOnes, IndexSet::full(2)), (RatVector{1, -1}));
  const RatVector x = pv1_to_pv2(kA12, IndexSet::full(2));
  EXPECT_EQ(x, (RatVector{q(1, 3), q(-2, 3)}));
  EXPECT_EQ(kA12 * x, (RatVector{-1, 0}));
}

TEST(Pv1ToPv2, RejectsNonWitness) {
  EXPECT_THROW(pv1_to_pv2(RatMatrix::identity(2), IndexSet::full(2)), NotAWitnessError);
  EXPECT_THROW(pv1_to_pv2(kNeg, IndexSet::empty(1)), NotAWitnessError);
}

TEST(Pv1ToPv2, SoundOnRandomNonP) {
  gen::Source src(41);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 1 + src.index(6);
    const RatMatrix m = src.matrix_with(n, 3, false);
    for (auto a : oracle::nonpositive_minors(m)) {
      const RatVector x = pv1_to_pv2(m, IndexSet(n, a));
      EXPECT_TRUE(oracle::sign_reversing(m, x));
      if (n > 3) break;
    }
  }
}

TEST(NormalizePv2, Examples) {
  const auto a = normalize_pv2(kNeg, {-2});
  EXPECT_EQ(a.d.negated, IndexSet::full(1));
  EXPECT_EQ(a.alpha, IndexSet::full(1));
  EXPECT_EQ(a.y, (RatVector{2}));

  const auto b = normalize_pv2(kOnes, {1, -1});
  EXPECT_EQ(b.d.negated, IndexSet::of(2, {1}));
  EXPECT_EQ(b.alpha, IndexSet::full(2));
  EXPECT_EQ(b.y, (RatVector{1, 1}));

  const auto c = normalize_pv2(RatMatrix{{-1, 0}, {5, 1}}, {1, 0});
  EXPECT_EQ(c.d.negated, IndexSet::empty(2));
  EXPECT_EQ(c.alpha, IndexSet::of(2, {0}));
  EXPECT_EQ(c.y, (RatVector{1}));

  EXPECT_THROW(normalize_pv2(RatMatrix{{1}}, {1}), NotAWitnessError);
}

TEST(ReduceAt, Examples) {
  EXPECT_THROW(reduce_at(RatMatrix{{-1, 0}, {0, -1}}, {1, 1}, 0), NoPositiveEntryError);
  EXPECT_THROW(reduce_at(RatMatrix{{1, -2}, {-2, 1}}, {1, 1}, 0), NoPositiveEntryError);
  EXPECT_THROW(reduce_at(RatMatrix{{1, -3}, {-2, 1}}, {1, 1}, 0), NoPositiveEntryError);

  const RatMatrix a{{-1, 3}, {2, -1}};
  const ReductionStep s = reduce_at(a, {1, 1}, 0);
  EXPECT_EQ(s.theta, q(5, 2));
  EXPECT_EQ(s.y, (RatVector{q(1, 2), 0}));
  EXPECT_EQ(a * s.y, (a * RatVector{1, 1} - q(5, 2) * unit_vector(2, 0)));

  EXPECT_THROW(reduce_at(kOnes, {1, 1}, 0), SingularError);
}

TEST(ReduceAt, ContractOnPositiveSignReversingVectors) {
  gen::Source src(42);
  int checked = 0;
  for (int it = 0; it < 4000 && checked < 300; ++it) {
    const std::size_t n = 1 + src.index(5);
    const RatMatrix a = src.int_matrix(n, 4);
    RatVector x(n);
    for (auto& v : x) v = static_cast<long>(src.integer(1, 5));
    const RatVector ax = a * x;
    if (std::any_of(ax.begin(), ax.end(), [](const Rational& v) { return v > 0; }) || det(a) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      ReductionStep s;
      try {
        s = reduce_at(a, x, i);
      } catch (const NoPositiveEntryError&) {
        // -A^{-1} e_i is then a non-negative solution of Ax <= 0.
        const RatVector c = Rational(-1) * inverse_column(a, i);
        EXPECT_TRUE(std::all_of(c.begin(), c.end(), [](const Rational& v) { return v >= 0; }));
        continue;
      }
      ++checked;
      EXPECT_GT(s.theta, 0);
      EXPECT_TRUE(std::all_of(s.y.begin(), s.y.end(), [](const Rational& v) { return v >= 0; }));
      EXPECT_TRUE(std::any_of(s.y.begin(), s.y.end(), [](const Rational& v) { return v == 0; }));
      const RatVector ay = a * s.y;
      EXPECT_TRUE(std::all_of(ay.begin(), ay.end(), [](const Rational& v) { return v <= 0; }));
      EXPECT_EQ(ay, ax - s.theta * unit_vector(n, i));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(ReduceAt, SomeReductionSurvives) {
  // n >= 2, x > 0 sign-reversing, all co-dimension-1 minors positive:
  // not every reduce_i(A, x) is zero.
  gen::Source src(43);
  int checked = 0;
  for (int it = 0; it < 20000 && checked < 100; ++it) {
    const std::size_t n = 2 + src.index(4);
    const RatMatrix a = src.int_matrix(n, 4);
    RatVector x(n);
    for (auto& v : x) v = static_cast<long>(src.integer(1, 5));
    const RatVector ax = a * x;
    if (std::any_of(ax.begin(), ax.end(), [](const Rational& v) { return v > 0; }) || det(a) <= 0) continue;
    bool minors_ok = true;
    for (std::size_t i = 0; i < n; ++i) minors_ok = minors_ok && principal_minor(a, IndexSet::full(n).without(i)) > 0;
    if (!minors_ok) continue;
    ++checked;
    bool survived = false;
    for (std::size_t i = 0; i < n; ++i) survived = survived || !is_zero(reduce_at(a, x, i).y);
    EXPECT_TRUE(survived);
  }
  EXPECT_GT(checked, 0);
}

TEST(Pv2ToPv1, Examples) {
  EXPECT_EQ(pv2_to_pv1(kNeg, {1}), IndexSet::full(1));
  EXPECT_EQ(pv2_to_pv1(kOnes, {1, -1}), IndexSet::full(2));
  EXPECT_EQ(pv2_to_pv1(kA12, {q(1, 3), q(-2, 3)}), IndexSet::full(2));
  EXPECT_THROW(pv2_to_pv1(RatMatrix::identity(2), {1, 1}), NotAWitnessError);
}

TEST(Pv2ToPv1, RoundTripWithWorkBounds) {
  gen::Source src(44);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + src.index(6);
    const RatMatrix m = src.matrix_with(n, 3, false);
    const IndexSet alpha(n, oracle::nonpositive_minors(m).back());
    const RatVector x = pv1_to_pv2(m, alpha);
    MinorSearchStats stats;
    const IndexSet beta = pv2_to_pv1(m, x, &stats);
    EXPECT_LE(oracle::minor(m, beta), 0);
    EXPECT_LE(stats.depth, n);
    EXPECT_LE(stats.determinants, (n + 1) * (n + 2) / 2);
  }
}

TEST(Pv2ToPv1, ArbitrarySignReversingInputs) {
  // Sign-reversing vectors found by search rather than by pv1_to_pv2.
  gen::Source src(45);
  int found = 0;
  for (int it = 0; it < 20000 && found < 150; ++it) {
    const std::size_t n = 2 + src.index(4);
    const RatMatrix m = src.int_matrix(n, 3);
    const RatVector x = src.int_vector(n, 2);
    if (!oracle::sign_reversing(m, x)) continue;
    ++found;
    MinorSearchStats stats;
    const IndexSet beta = pv2_to_pv1(m, x, &stats);
    EXPECT_LE(oracle::minor(m, beta), 0);
    EXPECT_LE(stats.depth, n);
    EXPECT_LE(stats.determinants, (n + 1) * (n + 2) / 2);
  }
  EXPECT_GT(found, 50);
}
