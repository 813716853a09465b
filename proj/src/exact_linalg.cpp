#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toric {

Integer floor_div(const Integer& x, const Integer& y) {
  Integer q = x / y;  // truncated toward zero
  if ((x % y) != 0 && ((x < 0) != (y < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& x, const Integer& y) {
  Integer q = x / y;
  if ((x % y) != 0 && ((x < 0) == (y < 0))) ++q;
  return q;
}

Integer mod_canonical(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += abs(m);
  return r;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

std::vector<Integer> IntegerMatrix::multiply(std::span<const Integer> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IntegerMatrix::multiply: size mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = std::move(s);
  }
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("IntegerMatrix multiply: shape mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

// Fraction-free (Bareiss) elimination; divisions are exact.
std::size_t rank(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m.at(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      m.swap_rows(c, pivot);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(c, c) - m.at(i, c) * m.at(c, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(c, c);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& u) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("inverse_unimodular: matrix must be square");
  const std::size_t n = u.rows();
  // Gauss-Jordan over the rationals on [U | I].
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(u.at(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug[pivot][c] == 0) ++pivot;
    if (pivot == n)
      throw std::invalid_argument("inverse_unimodular: matrix is singular");
    std::swap(aug[c], aug[pivot]);
    const Rational p = aug[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) aug[c][j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntegerMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = aug[i][n + j];
      if (denominator(q) != 1)
        throw std::invalid_argument("inverse_unimodular: inverse is not integral");
      inv.at(i, j) = numerator(q);
    }
  return inv;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

// Position of the smallest-magnitude nonzero entry of d in the trailing
// submatrix starting at (t, t); nullopt if that submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(
    const IntegerMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Integer& e = d.at(i, j);
      if (e == 0) continue;
      Integer a = abs(e);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
  IntegerMatrix& d = s.d;
  IntegerMatrix& u = s.u;
  IntegerMatrix& v = s.v;

  // row dst -= q * row src, applied to D and U alike
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < n; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (std::size_t j = 0; j < m; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m; ++i) d.at(i, dst) -= q * d.at(i, src);
    for (std::size_t i = 0; i < n; ++i) v.at(i, dst) -= q * v.at(i, src);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    if (!smallest_nonzero(d, t)) break;
    while (true) {
      auto pos = smallest_nonzero(d, t);
      if (pos->first != t) {
        d.swap_rows(t, pos->first);
        u.swap_rows(t, pos->first);
      }
      if (pos->second != t) {
        d.swap_cols(t, pos->second);
        v.swap_cols(t, pos->second);
      }
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        row_op(i, t, d.at(i, t) / d.at(t, t));
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        col_op(j, t, d.at(t, j) / d.at(t, t));
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the whole trailing submatrix for the chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_op(t, i, Integer(-1));  // row t += row i
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d.at(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d.at(t, j) = -d.at(t, j);
      for (std::size_t j = 0; j < m; ++j) u.at(t, j) = -u.at(t, j);
    }
  }

  if (!(u * a * v == d))
    throw std::logic_error("smith_normal_form: U*A*V != D");
  if (abs(determinant(u)) != 1 || abs(determinant(v)) != 1)
    throw std::logic_error("smith_normal_form: transform is not unimodular");
  return s;
}

std::optional<std::vector<Integer>> solve_diophantine(const IntegerMatrix& a,
                                                      std::span<const Integer> b) {
  if (b.size() != a.rows())
    throw std::invalid_argument(
        "solve_diophantine: rhs length must equal row count");
  const std::size_t m = a.rows(), n = a.cols();
  auto s = smith_normal_form(a);
  std::vector<Integer> c = s.u.multiply(b);
  std::vector<Integer> y(n, 0);
  const std::size_t k = std::min(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Integer di = i < k ? s.d.at(i, i) : Integer(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    }
  }
  return s.v.multiply(y);
}

}  // namespace toric
