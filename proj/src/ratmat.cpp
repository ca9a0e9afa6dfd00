#include "pwitness/ratmat.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "pwitness/errors.hpp"

namespace pw {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    assert(r.size() == n_);
    for (const auto& v : r) {
      a_.push_back(v);
      a_.back().canonicalize();
    }
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  RatMatrix m(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m(*this);
  for (auto& v : m.a_) v = -v;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.n_ == b.n_);
  const std::size_t n = a.n_;
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  assert(a.n_ == x.size());
  RatVector y(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) y[i] += a(i, j) * x[j];
  return y;
}

RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  const auto r = rows.members();
  const auto c = cols.members();
  assert(r.size() == c.size());
  RatMatrix s(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = m(r[i], c[j]);
  return s;
}

Rational det(const RatMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;

  // Clear denominators row by row, then run integer Bareiss elimination.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    const mpz_class& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Rational d(a[n * n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

namespace {

// Row-reduces [A | B] in place to reduced row echelon form over the first
// `cols` columns, choosing the first non-zero entry at or below the current
// row as pivot. Returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RatVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<RatVector> augmented(const RatMatrix& a, const RatVector* b) {
  const std::size_t n = a.size();
  std::vector<RatVector> rows(n, RatVector(n + (b ? 1 : 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    if (b) rows[i][n] = (*b)[i];
  }
  return rows;
}

}  // namespace

RatVector solve(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.size();
  assert(b.size() == n);
  auto rows = augmented(a, &b);
  if (rref(rows, n).size() < n) throw SingularError();
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i][n];
  return x;
}

RatVector kernel_vector(const RatMatrix& a) {
  const std::size_t n = a.size();
  auto rows = augmented(a, nullptr);
  const auto pivots = rref(rows, n);
  if (pivots.size() == n) throw NotSingularError();

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  RatVector x(n);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free_col];

  const auto first = std::find_if(x.begin(), x.end(), [](const Rational& v) { return sgn(v) != 0; });
  if (sgn(*first) < 0)
    for (auto& v : x) v = -v;
  return x;
}

RatVector inverse_column(const RatMatrix& a, std::size_t i) {
  return solve(a, unit_vector(a.size(), i));
}

std::size_t bit_length(const mpz_class& k) {
  if (k == 0) return 1;
  // ceil(log2(|k|+1)) is the number of binary digits of |k|.
  return mpz_sizeinbase(k.get_mpz_t(), 2);
}

std::size_t bit_size(const RatMatrix& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      s += bit_length(m(i, j).get_num()) + bit_length(m(i, j).get_den());
  return std::max<std::size_t>(s, 1);
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector e(n);
  e[i] = 1;
  return e;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVector operator*(const Rational& s, const RatVector& x) {
  RatVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = s * x[i];
  return y;
}

bool is_zero(const RatVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) == 0; });
}

RatVector restrict_vector(const RatVector& x, const IndexSet& s) {
  RatVector y;
  y.reserve(s.size());
  for (auto i : s.members()) y.push_back(x[i]);
  return y;
}

RatVector pad_vector(const RatVector& y, const IndexSet& s) {
  RatVector x(s.dimension());
  const auto m = s.members();
  assert(m.size() == y.size());
  for (std::size_t k = 0; k < m.size(); ++k) x[m[k]] = y[k];
  return x;
}

IndexSet positive_support(const RatVector& x) {
  IndexSet s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) > 0) s = s.with(i);
  return s;
}

std::string to_string(const RatVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ' ';
    Rational v = x[i];
    v.canonicalize();
    s += v.get_str();
  }
  return s;
}

}  // namespace pw
