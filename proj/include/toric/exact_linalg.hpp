#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor / ceiling division on arbitrary-precision integers (y != 0).
Integer floor_div(const Integer& x, const Integer& y);
Integer ceil_div(const Integer& x, const Integer& y);

// Canonical residue of x modulo m > 0, in [0, m).
Integer mod_canonical(const Integer& x, const Integer& m);

// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::vector<Integer> multiply(std::span<const Integer> v) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const IntegerMatrix& a);

// Exact determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

// Exact inverse of a unimodular integer matrix. Throws std::invalid_argument
// if the matrix is singular or the inverse is not integral.
IntegerMatrix inverse_unimodular(const IntegerMatrix& u);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;

  std::vector<Integer> diagonal() const;
};

// Smith normal form by row/column reduction, pivoting on the smallest
// nonzero entry. The decomposition is re-verified by multiplication before
// being returned.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Some integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_diophantine(
    const IntegerMatrix& a, std::span<const Integer> b);

}  // namespace toric
