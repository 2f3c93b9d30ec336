#pragma once

#include <vector>

#include "latbb/reduction.hpp"

namespace latbb {

LatticeBasis certify(IntMatrix basis, ReductionStatus status);

namespace detail {

/// Fraction-free Gram-Schmidt data (Cohen's d_i and lambda_ij):
/// d[i] = prod_{j<i} |b_j*|^2 (d[0] = 1), lambda(i,j) = d[j+1] * mu_ij.
struct IntegralGso {
  std::vector<Integer> d;
  IntMatrix lambda;

  Rational mu(std::size_t i, std::size_t j) const { return Rational(lambda(i, j), d[j + 1]); }
  Rational bstar_sq(std::size_t i) const { return Rational(d[i + 1], d[i]); }
};

IntegralGso integral_gso(const std::vector<IntVector>& cols);

std::vector<IntVector> columns_of(const IntMatrix& m);
IntMatrix matrix_of(const std::vector<IntVector>& cols, std::size_t rows);

/// In-place integral LLL on the columns; `u` accumulates the column operations.
void lll_in_place(std::vector<IntVector>& b, std::vector<IntVector>& u, const Rational& delta);

/// Makes the first nonzero entry of each basis column positive, negating the
/// matching column of U.
void normalize_signs(std::vector<IntVector>& b, std::vector<IntVector>& u);

/// Coefficients (x_level, ..., x_{r-1}) of a shortest nonzero vector of the
/// projected lattice L_level, plus its exact squared norm. Ties are broken
/// towards the lexicographically smallest (x_{r-1}, ..., x_level), so the
/// current b_level wins whenever it is already shortest.
struct ProjectedSvp {
  IntVector coeffs;
  Rational norm_sq;
};

ProjectedSvp enumerate_projected(const std::vector<IntVector>& b, std::size_t level);

}  // namespace detail
}  // namespace latbb
