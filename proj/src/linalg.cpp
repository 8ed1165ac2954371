#include "qbsa/linalg.hpp"

#include <algorithm>
#include <utility>

#include "qbsa/error.hpp"

namespace qbsa {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvariantViolation, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::InvariantViolation, "matrix shapes do not compose");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

namespace {

std::size_t rank_rational(IntMatrix m) {
  // Bareiss: every division below is exact.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t out = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) out = out * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& src, std::int64_t p) {
  const std::size_t rows = src.rows(), cols = src.cols();
  std::vector<std::int64_t> m(rows * cols);
  const BigInt bp = p;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt v = src(i, j) % bp;
      if (v < 0) v += bp;
      m[i * cols + j] = static_cast<std::int64_t>(v);
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const std::int64_t inv = mod_pow(m[r * cols + c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = m[i * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i * cols + j] = ((m[i * cols + j] - f * m[r * cols + j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& m, Characteristic c) {
  if (c.is_zero()) return rank_rational(m);
  return rank_mod_p(m, c.value());
}

BigInt determinant(const IntMatrix& src) {
  if (src.rows() != src.cols()) fail(ErrorCode::InvariantViolation, "determinant of a non-square matrix");
  const std::size_t n = src.rows();
  if (n == 0) return 1;
  IntMatrix m = src;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_dst -= f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

// Floor-free quotient is enough: we only need |remainder| < |pivot|.
BigInt quotient(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols), {}};
  IntMatrix& d = out.diagonal;
  IntMatrix& left = out.left;
  IntMatrix& right = out.right;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == rows) break;
      swap_rows(d, t, pi);
      swap_rows(left, t, pi);
      swap_cols(d, t, pj);
      swap_cols(right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const BigInt f = quotient(d(i, t), d(t, t));
        add_row(d, i, t, f);
        add_row(left, i, t, f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const BigInt f = quotient(d(t, j), d(t, t));
        add_col(d, j, t, f);
        add_col(right, j, t, f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // Pull the offending row into row t; the next round shrinks the pivot.
      add_row(d, t, bad, -1);
      add_row(left, t, bad, -1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
    }
  }
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.entries.push_back(d(i, i));
  return out;
}

}  // namespace qbsa
