#include "latbb/exactmath.hpp"

namespace latbb {

namespace {

// Replaces columns (c, j) of both matrices by (s*c + t*j, -(b/g)*c + (a/g)*j).
void combine_columns(IntMatrix& h, IntMatrix& v, std::size_t c, std::size_t j, const Integer& s,
                     const Integer& t, const Integer& bg, const Integer& ag) {
  for (IntMatrix* m : {&h, &v}) {
    for (std::size_t r = 0; r < m->rows(); ++r) {
      Integer xc = (*m)(r, c);
      Integer xj = (*m)(r, j);
      (*m)(r, c) = s * xc + t * xj;
      (*m)(r, j) = ag * xj - bg * xc;
    }
  }
}

void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix& h = res.H;
  IntMatrix& v = res.V;
  const std::size_t n = m.cols();
  std::size_t c = 0;
  for (std::size_t i = 0; i < m.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(h(i, j)) == 0) continue;
      Integer a = h(i, c), b = h(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer bg = b / g, ag = a / g;
      combine_columns(h, v, c, j, s, t, bg, ag);
    }
    if (sgn(h(i, c)) == 0) continue;
    if (sgn(h(i, c)) < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, c) = -h(r, c);
      for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) = -v(r, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      axpy_column(h, j, c, q);
      axpy_column(v, j, c, q);
    }
    res.pivot_rows.push_back(i);
    ++c;
  }
  res.rank = c;
  return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  HnfResult r = hnf(a);
  if (r.rank != a.rows()) throw Error(ErrorCode::RankDeficient, "rows of A are dependent");
  return r.V.column_block(r.rank, a.cols() - r.rank);
}

IntVector solve_integral(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "rhs length mismatch");
  HnfResult r = hnf(a);
  if (r.rank != a.rows()) throw Error(ErrorCode::RankDeficient, "rows of A are dependent");
  IntVector y(a.cols());
  for (std::size_t j = 0; j < r.rank; ++j) {
    const std::size_t p = r.pivot_rows[j];
    Integer rhs = b[p];
    for (std::size_t k = 0; k < j; ++k) rhs -= r.H(p, k) * y[k];
    if (!mpz_divisible_p(rhs.get_mpz_t(), r.H(p, j).get_mpz_t()))
      throw Error(ErrorCode::NoIntegralSolution, "right-hand side is not in the image lattice of A");
    y[j] = rhs / r.H(p, j);
  }
  IntVector x = r.V * y;
  if (a * x != b) throw Error(ErrorCode::NoIntegralSolution, "inconsistent system");
  return x;
}

Integer gcd_of_maximal_minors(const IntMatrix& a) {
  HnfResult r = hnf(a);
  if (r.rank != a.rows()) throw Error(ErrorCode::RankDeficient, "rows of A are dependent");
  Integer g = 1;
  for (std::size_t j = 0; j < r.rank; ++j) g *= r.H(r.pivot_rows[j], j);
  return g;
}

}  // namespace latbb
