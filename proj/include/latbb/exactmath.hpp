#pragma once

// Exact integer/rational linear algebra. Every quantity here is exact:
// integers are GMP mpz, rationals are canonical GMP mpq.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "latbb/error.hpp"

namespace latbb {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix. Columns are the lattice vectors wherever a matrix
/// is used as a basis.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Keeps columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const {
    Matrix b(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
    return b;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<T>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatMatrix to_rational(const IntMatrix& m);

/// Stacks `top` over `bottom` (same column count).
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Integer norm_sq(const IntVector& v);

/// Gram-Schmidt data of the columns b_1..b_r of a basis matrix.
struct GsoData {
  RatMatrix bstar;                  // column i is b_i*
  RatMatrix mu;                     // r x r, mu(i,j) for j < i, unit diagonal
  std::vector<Rational> bstar_norms_sq;
};

GsoData gram_schmidt(const IntMatrix& basis);
GsoData gram_schmidt(const RatMatrix& basis);

/// Column-style Hermite normal form: H = M * V, V unimodular. H is lower
/// echelon with positive pivots, entries left of a pivot reduced into
/// [0, pivot), and zero columns last.
struct HnfResult {
  IntMatrix H;
  IntMatrix V;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // row of the pivot in column j < rank
};

HnfResult hnf(const IntMatrix& m);

/// Basis of the integer kernel lattice {x in Z^n : A x = 0}, n x (n - m).
IntMatrix kernel_basis(const IntMatrix& a);

/// Some x0 in Z^n with A x0 = b. Throws NoIntegralSolution.
IntVector solve_integral(const IntMatrix& a, const IntVector& b);

/// det(M^T M), exact.
Integer gram_det(const IntMatrix& m);

/// Determinant of a square matrix (fraction-free Bareiss).
Integer determinant(const IntMatrix& m);

/// gcd of the m x m minors of A (rank m), via HNF.
Integer gcd_of_maximal_minors(const IntMatrix& a);

/// Largest integer t with t^2 <= q.
Integer isqrt_floor(const Rational& q);

/// Exact inverse of a square matrix; throws DependentColumns when singular.
RatMatrix inverse(const RatMatrix& m);

/// Inverse of a unimodular integer matrix.
IntMatrix inverse_unimodular(const IntMatrix& u);

std::size_t rank(const IntMatrix& m);

/// floor/ceil/nearest of a rational (nearest rounds halves towards +inf).
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);
Integer round_q(const Rational& q);

}  // namespace latbb
