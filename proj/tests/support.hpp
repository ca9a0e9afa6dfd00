#pragma once

// Independent oracles and random generators for the tests. Nothing here calls
// into the library's linear algebra: determinants are cofactor expansions,
// solves are Cramer's rule, enumerations are plain nested loops.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pwitness/core.hpp"
#include "pwitness/ratmat.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;

inline Grid to_grid(const pw::RatMatrix& m) {
  Grid g(m.size(), std::vector<mpq_class>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) g[i][j] = m(i, j);
  return g;
}

/// Laplace expansion along the first row.
inline mpq_class cofactor_det(const Grid& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const mpq_class term = a[0][j] * cofactor_det(minor);
    d += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return d;
}

inline Grid principal(const Grid& a, std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask >> i & 1) idx.push_back(i);
  Grid s(idx.size(), std::vector<mpq_class>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) s[r][c] = a[idx[r]][idx[c]];
  return s;
}

inline mpq_class minor(const pw::RatMatrix& m, const pw::IndexSet& a) {
  return cofactor_det(principal(to_grid(m), a.bits()));
}

/// Column j of C_alpha is -M_{.j} for j in alpha and e_j otherwise.
inline Grid comp(const Grid& m, std::uint64_t alpha) {
  const std::size_t n = m.size();
  Grid c(n, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) c[i][j] = (alpha >> j & 1) ? mpq_class(-m[i][j]) : mpq_class(i == j ? 1 : 0);
  return c;
}

/// Cramer's rule. Empty result when a is singular.
inline std::vector<mpq_class> cramer(const Grid& a, const std::vector<mpq_class>& b) {
  const mpq_class d = cofactor_det(a);
  if (d == 0) return {};
  std::vector<mpq_class> x(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Grid aj = a;
    for (std::size_t i = 0; i < a.size(); ++i) aj[i][j] = b[i];
    x[j] = cofactor_det(aj) / d;
  }
  return x;
}

/// Every non-empty mask with a non-positive minor, sorted by size then by
/// the lexicographic order of the member lists.
inline std::vector<std::uint64_t> nonpositive_minors(const pw::RatMatrix& m) {
  const Grid g = to_grid(m);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << m.size()); ++a)
    if (cofactor_det(principal(g, a)) <= 0) out.push_back(a);
  auto members = [](std::uint64_t a) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if (a >> i & 1) v.push_back(i);
    return v;
  };
  std::sort(out.begin(), out.end(), [&](auto x, auto y) {
    const auto mx = members(x), my = members(y);
    if (mx.size() != my.size()) return mx.size() < my.size();
    return mx < my;
  });
  return out;
}

inline bool is_p(const pw::RatMatrix& m) { return nonpositive_minors(m).empty(); }

inline bool sign_reversing(const pw::RatMatrix& m, const pw::RatVector& x) {
  bool nonzero = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpq_class mx = 0;
    for (std::size_t j = 0; j < m.size(); ++j) mx += m(i, j) * x[j];
    if (x[i] * mx > 0) return false;
    if (x[i] != 0) nonzero = true;
  }
  return nonzero;
}

/// Cube-order rank -> mask: bit string with coordinate 1 leftmost, read as a
/// binary number.
inline std::uint64_t cube_mask(std::size_t n, std::uint64_t rank) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (rank >> (n - 1 - k) & 1) m |= std::uint64_t{1} << k;
  return m;
}

/// Number of faces [S,T] without exactly one sink, by direct enumeration.
inline std::uint64_t bad_faces(std::size_t n, const std::vector<std::uint64_t>& out) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t <= full; ++t)
    for (std::uint64_t s = 0; s <= full; ++s) {
      if ((s & ~t) != 0) continue;
      int sinks = 0;
      for (std::uint64_t v = 0; v <= full; ++v)
        if ((v & s) == s && (v & ~t) == 0 && (out[v] & (t & ~s)) == 0) ++sinks;
      if (sinks != 1) ++bad;
    }
  return bad;
}

/// Every C_alpha invertible and C_alpha^{-1} q free of zeros.
inline bool nondegenerate_q(const pw::RatMatrix& m, const pw::RatVector& q) {
  const Grid g = to_grid(m);
  const std::vector<mpq_class> rhs(q.begin(), q.end());
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
    const auto x = cramer(comp(g, a), rhs);
    if (x.empty()) return false;
    for (const auto& v : x)
      if (v == 0) return false;
  }
  return true;
}

}  // namespace oracle

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : eng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }
  std::uint64_t mask(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::uint64_t>(integer(0, (std::int64_t{1} << n) - 1));
  }

  pw::RatMatrix int_matrix(std::size_t n, std::int64_t b) {
    pw::RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(integer(-b, b));
    return m;
  }

  pw::Rational rational(std::int64_t b, std::int64_t d) {
    pw::Rational r(static_cast<long>(integer(-b, b)), static_cast<unsigned long>(integer(1, d)));
    r.canonicalize();
    return r;
  }

  pw::RatMatrix rat_matrix(std::size_t n, std::int64_t b, std::int64_t d) {
    pw::RatMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rational(b, d);
    return m;
  }

  pw::RatVector int_vector(std::size_t n, std::int64_t b) {
    pw::RatVector v(n);
    for (auto& x : v) x = static_cast<long>(integer(-b, b));
    return v;
  }

  /// Integer matrix in [-b, b] whose P status matches `want_p`; when
  /// `nondegenerate` is set every principal minor is non-zero as well.
  pw::RatMatrix matrix_with(std::size_t n, std::int64_t b, bool want_p, bool nondegenerate = false) {
    for (;;) {
      pw::RatMatrix m = int_matrix(n, b);
      const auto bad = oracle::nonpositive_minors(m);
      if (bad.empty() != want_p) continue;
      if (nondegenerate && !want_p) {
        bool zero = false;
        for (auto a : bad) zero = zero || oracle::minor(m, pw::IndexSet(n, a)) == 0;
        if (zero) continue;
      }
      return m;
    }
  }

  /// (M, q) where both the empty and the full basis are strict sinks and
  /// det(M) > 0 with a positive diagonal, so the sink walk from (full, empty)
  /// has to take at least one step. q is nondegenerate for M.
  std::pair<pw::RatMatrix, pw::RatVector> walk_instance(std::size_t n) {
    for (;;) {
      pw::RatMatrix m = int_matrix(n, 3);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = static_cast<long>(integer(1, 3));
      if (oracle::minor(m, pw::IndexSet::full(n)) <= 0) continue;
      pw::RatVector u(n);
      for (auto& x : u) x = static_cast<long>(integer(1, 5));
      pw::RatVector q = m * u;
      bool positive = true;
      for (auto& x : q) {
        x = -x;
        positive = positive && x > 0;
      }
      if (!positive || !oracle::nondegenerate_q(m, q)) continue;
      return {m, q};
    }
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
