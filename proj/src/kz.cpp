#include <stdexcept>

#include "reduction_internal.hpp"

namespace latbb {

namespace {

void check_cap(const LatticeBasis& in, const ReductionParams& params) {
  if (in.rank() > params.svp_dim_cap)
    throw Error(ErrorCode::DimensionCapExceeded,
                "rank " + std::to_string(in.rank()) + " exceeds svp_dim_cap " + std::to_string(params.svp_dim_cap));
}

// Column operations on positions level.. so that the new b_level equals
// sum_a x_a b_{level+a}; x must be primitive.
void insert_vector(std::vector<IntVector>& b, std::vector<IntVector>& u, std::size_t level, IntVector x) {
  auto combine = [](std::vector<IntVector>& cols, std::size_t i, std::size_t j, const Integer& a1,
                    const Integer& a2, const Integer& c1, const Integer& c2) {
    // col_i <- a1 col_i + a2 col_j ; col_j <- c1 col_i + c2 col_j
    for (std::size_t r = 0; r < cols[i].size(); ++r) {
      Integer xi = cols[i][r], xj = cols[j][r];
      cols[i][r] = a1 * xi + a2 * xj;
      cols[j][r] = c1 * xi + c2 * xj;
    }
  };
  for (std::size_t a = x.size() - 1; a >= 1; --a) {
    if (sgn(x[a]) == 0) continue;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x[a - 1].get_mpz_t(), x[a].get_mpz_t());
    Integer a1 = x[a - 1] / g, a2 = x[a] / g;
    Integer c1 = -t, c2 = s;
    combine(b, level + a - 1, level + a, a1, a2, c1, c2);
    combine(u, level + a - 1, level + a, a1, a2, c1, c2);
    x[a - 1] = g;
    x[a] = 0;
  }
  if (x[0] != 1) throw std::logic_error("inserted vector is not primitive");
}

bool is_unit_first(const IntVector& x) {
  if (x[0] != 1) return false;
  for (std::size_t a = 1; a < x.size(); ++a)
    if (sgn(x[a]) != 0) return false;
  return true;
}

}  // namespace

ReductionResult kz_reduce(const LatticeBasis& in, const ReductionParams& params) {
  params.validate();
  check_cap(in, params);
  auto cols = detail::columns_of(in.basis());
  auto u = detail::columns_of(IntMatrix::identity(in.rank()));
  detail::lll_in_place(cols, u, params.delta);
  // Each pass fixes b_level(level) as a shortest vector of L_level. LLL after
  // an insertion cannot swap inside the fixed prefix, since Lovasz holds there
  // with delta = 1.
  for (std::size_t level = 0; level + 1 < cols.size(); ++level) {
    detail::ProjectedSvp svp = detail::enumerate_projected(cols, level);
    if (is_unit_first(svp.coeffs)) continue;
    insert_vector(cols, u, level, svp.coeffs);
    detail::lll_in_place(cols, u, params.delta);
  }
  detail::normalize_signs(cols, u);
  LatticeBasis out = certify(detail::matrix_of(cols, in.ambient_dim()), ReductionStatus::KZ);
  return {std::move(out), detail::matrix_of(u, in.rank())};
}

RatMatrix reciprocal_basis(const RatMatrix& basis) {
  const std::size_t r = basis.cols();
  RatMatrix dual = basis * inverse(basis.transpose() * basis);
  RatMatrix out(basis.rows(), r);
  for (std::size_t j = 0; j < r; ++j) out.set_column(j, dual.column(r - 1 - j));
  return out;
}

RatMatrix reciprocal_basis(const LatticeBasis& in) { return reciprocal_basis(to_rational(in.basis())); }

IntMatrix clear_denominators(const RatMatrix& m, Integer* scale) {
  Integer l = 1;
  for (const Rational& q : m.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      out(i, j) = v.get_num();
    }
  if (scale) *scale = l;
  return out;
}

ReductionResult rkz_reduce(const LatticeBasis& in, const ReductionParams& params) {
  params.validate();
  check_cap(in, params);
  const std::size_t r = in.rank();
  IntMatrix dual = clear_denominators(reciprocal_basis(in));
  ReductionResult kz = kz_reduce(LatticeBasis(dual), params);
  // reciprocal(B W) = reciprocal(B) V  <=>  W = J V^{-T} J
  IntMatrix vinv_t = inverse_unimodular(kz.U).transpose();
  IntMatrix w(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) w(i, j) = vinv_t(r - 1 - i, r - 1 - j);
  auto cols = detail::columns_of(in.basis() * w);
  auto u = detail::columns_of(w);
  detail::normalize_signs(cols, u);
  LatticeBasis out = certify(detail::matrix_of(cols, in.ambient_dim()), ReductionStatus::RKZ);
  return {std::move(out), detail::matrix_of(u, r)};
}

ReductionResult reduce(const LatticeBasis& in, ReductionKind kind, const ReductionParams& params) {
  switch (kind) {
    case ReductionKind::LLL: return lll_reduce(in, params);
    case ReductionKind::KZ: return kz_reduce(in, params);
    case ReductionKind::RKZ: return rkz_reduce(in, params);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown reduction kind");
}

IntMatrix projected_lattice(const IntMatrix& basis, std::size_t level, Integer* scale) {
  if (level < 1 || level > basis.cols()) throw Error(ErrorCode::InvalidArgument, "level out of range");
  GsoData g = gram_schmidt(basis);
  const std::size_t first = level - 1;
  RatMatrix proj(basis.rows(), basis.cols() - first);
  for (std::size_t j = first; j < basis.cols(); ++j) {
    for (std::size_t row = 0; row < basis.rows(); ++row) {
      Rational v = g.bstar(row, j);
      for (std::size_t t = first; t < j; ++t) v += g.mu(j, t) * g.bstar(row, t);
      proj(row, j - first) = v;
    }
  }
  return clear_denominators(proj, scale);
}

bool is_kz_reduced(const IntMatrix& basis, const ReductionParams& params) {
  if (!is_size_reduced(gram_schmidt(basis))) return false;
  for (std::size_t level = 1; level <= basis.cols(); ++level) {
    IntMatrix proj = projected_lattice(basis, level);
    ShortestVector sv = shortest_vector(LatticeBasis(proj), params);
    if (sv.norm_sq != norm_sq(proj.column(0))) return false;
  }
  return true;
}

bool is_rkz_reduced(const IntMatrix& basis, const ReductionParams& params) {
  IntMatrix dual = clear_denominators(reciprocal_basis(to_rational(basis)));
  return is_kz_reduced(dual, params);
}

}  // namespace latbb
