#include "latbb/exactmath.hpp"

#include <algorithm>

namespace latbb {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DependentColumns: return "DependentColumns";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NoIntegralSolution: return "NoIntegralSolution";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorCode::InvalidArgument, "vstack column mismatch");
  IntMatrix s(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) s(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) s(top.rows() + i, j) = bottom(i, j);
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer norm_sq(const IntVector& v) { return dot(v, v); }

GsoData gram_schmidt(const RatMatrix& basis) {
  const std::size_t n = basis.rows();
  const std::size_t r = basis.cols();
  GsoData g{RatMatrix(n, r), RatMatrix(r, r), std::vector<Rational>(r)};
  std::vector<RatVector> bstar(r);
  for (std::size_t i = 0; i < r; ++i) {
    RatVector bi = basis.column(i);
    RatVector v = bi;
    for (std::size_t j = 0; j < i; ++j) {
      Rational mu = dot(bi, bstar[j]) / g.bstar_norms_sq[j];
      g.mu(i, j) = mu;
      if (sgn(mu) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] -= mu * bstar[j][k];
    }
    g.mu(i, i) = 1;
    g.bstar_norms_sq[i] = dot(v, v);
    if (sgn(g.bstar_norms_sq[i]) == 0)
      throw Error(ErrorCode::DependentColumns, "column " + std::to_string(i + 1) + " is dependent");
    g.bstar.set_column(i, v);
    bstar[i] = std::move(v);
  }
  return g;
}

GsoData gram_schmidt(const IntMatrix& basis) { return gram_schmidt(to_rational(basis)); }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer gram_det(const IntMatrix& m) { return determinant(m.transpose() * m); }

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_q(const Rational& q) { return floor_q(q + Rational(1, 2)); }

Integer isqrt_floor(const Rational& q) {
  if (sgn(q) < 0) throw Error(ErrorCode::NegativeInput, "isqrt_floor of a negative rational");
  Integer f = floor_q(q);
  Integer t;
  mpz_sqrt(t.get_mpz_t(), f.get_mpz_t());
  return t;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw Error(ErrorCode::DependentColumns, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(p, j));
        std::swap(inv(c, j), inv(p, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& u) {
  RatMatrix inv = inverse(to_rational(u));
  IntMatrix out(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) {
      if (inv(i, j).get_den() != 1) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

std::size_t rank(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace latbb
