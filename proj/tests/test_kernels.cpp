#include <gtest/gtest.h>

#include "pwitness/kernels.hpp"
#include "support.hpp"

using namespace pw;
using namespace pw::kernels;

namespace {

void expect_same(const std::vector<BasisSigns>& a, const std::vector<BasisSigns>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].singular, b[i].singular);
    EXPECT_EQ(a[i].positive, b[i].positive);
    EXPECT_EQ(a[i].zero, b[i].zero);
  }
}

class KernelsAgree : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { set_threads(GetParam()); }
  void TearDown() override { set_threads(1); }
};

}  // namespace

TEST_P(KernelsAgree, FirstNonpositiveMinor) {
  gen::Source src(31);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + src.index(7);
    const RatMatrix m = src.int_matrix(n, 3);
    const auto s = first_nonpositive_minor(m, Backend::Serial);
    EXPECT_EQ(s, first_nonpositive_minor(m, Backend::OpenMP));
    if (n <= 5) {
      const auto bad = oracle::nonpositive_minors(m);
      EXPECT_EQ(s.has_value(), !bad.empty());
      if (s) {
        EXPECT_EQ(*s, bad.front());
      }
    }
  }
}

TEST_P(KernelsAgree, BasisSigns) {
  gen::Source src(32);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + src.index(6);
    const RatMatrix m = src.int_matrix(n, 2);
    const RatVector q = src.int_vector(n, 2);
    expect_same(basis_signs(m, q, Backend::Serial), basis_signs(m, q, Backend::OpenMP));
  }
}

TEST_P(KernelsAgree, OutmapViolationAndFaces) {
  gen::Source src(33);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + src.index(6);
    std::vector<Mask> out(std::size_t{1} << n);
    if (it % 2 == 0) {
      // A linear-function USO with a few outmap bits toggled.
      const Mask neg = src.mask(n);
      for (Mask a = 0; a < out.size(); ++a) out[a] = ~(a ^ neg) & IndexSet::full_mask(n);
      for (int k = static_cast<int>(src.integer(0, 2)); k > 0; --k) out[src.mask(n)] ^= IndexSet::bit(src.index(n));
    } else {
      for (auto& o : out) o = src.mask(n);
    }
    EXPECT_EQ(first_outmap_violation(n, out, Backend::Serial), first_outmap_violation(n, out, Backend::OpenMP));
    const FaceScan s = scan_faces(n, out, Backend::Serial), p = scan_faces(n, out, Backend::OpenMP);
    EXPECT_EQ(s.faces, p.faces);
    EXPECT_EQ(s.bad_faces, p.bad_faces);
    if (n <= 4) {
      EXPECT_EQ(s.bad_faces, oracle::bad_faces(n, out));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelsAgree, ::testing::Values(1, 2, 4));

TEST(Kernels, FaceCountIsThreeToTheN) {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<Mask> out(std::size_t{1} << n, 0);
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= 3;
    EXPECT_EQ(scan_faces(n, out, Backend::Serial).faces, p);
    EXPECT_EQ(scan_faces(n, out, Backend::OpenMP).faces, p);
  }
}
