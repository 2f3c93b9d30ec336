#include <stdexcept>

#include "reduction_internal.hpp"

namespace latbb {

const char* to_string(ReductionStatus s) noexcept {
  switch (s) {
    case ReductionStatus::Raw: return "raw";
    case ReductionStatus::LLL: return "lll";
    case ReductionStatus::KZ: return "kz";
    case ReductionStatus::RKZ: return "rkz";
  }
  return "?";
}

const char* to_string(ReductionKind k) noexcept {
  switch (k) {
    case ReductionKind::LLL: return "lll";
    case ReductionKind::KZ: return "kz";
    case ReductionKind::RKZ: return "rkz";
  }
  return "?";
}

ReductionKind parse_reduction_kind(const std::string& s) {
  if (s == "lll" || s == "LLL") return ReductionKind::LLL;
  if (s == "kz" || s == "KZ") return ReductionKind::KZ;
  if (s == "rkz" || s == "RKZ") return ReductionKind::RKZ;
  throw Error(ErrorCode::InvalidArgument, "unknown reduction '" + s + "'");
}

void ReductionParams::validate() const {
  if (!(delta > Rational(1, 4) && delta <= 1))
    throw Error(ErrorCode::InvalidArgument, "delta must lie in (1/4, 1]");
  if (svp_dim_cap < 1) throw Error(ErrorCode::InvalidArgument, "svp_dim_cap must be >= 1");
}

LatticeBasis::LatticeBasis(IntMatrix basis) : LatticeBasis(std::move(basis), ReductionStatus::Raw) {}

LatticeBasis::LatticeBasis(IntMatrix basis, ReductionStatus status)
    : basis_(std::move(basis)), status_(status) {
  if (basis_.rows() == 0 || basis_.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "empty basis");
  gso_ = gram_schmidt(basis_);
}

LatticeBasis certify(IntMatrix basis, ReductionStatus status) {
  return LatticeBasis(std::move(basis), status);
}

namespace detail {

std::vector<IntVector> columns_of(const IntMatrix& m) {
  std::vector<IntVector> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols[c] = m.column(c);
  return cols;
}

IntMatrix matrix_of(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

IntegralGso integral_gso(const std::vector<IntVector>& cols) {
  const std::size_t r = cols.size();
  IntegralGso g{std::vector<Integer>(r + 1), IntMatrix(r, r)};
  g.d[0] = 1;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer u = dot(cols[k], cols[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = g.d[i + 1] * u - g.lambda(k, i) * g.lambda(j, i);
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), g.d[i].get_mpz_t());
      }
      if (j < k) {
        g.lambda(k, j) = u;
      } else {
        if (sgn(u) == 0)
          throw Error(ErrorCode::DependentColumns, "column " + std::to_string(k + 1) + " is dependent");
        g.d[k + 1] = u;
      }
    }
  }
  return g;
}

namespace {

void sub_multiple(IntVector& dst, const IntVector& src, const Integer& q) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

struct IntegralLll {
  std::vector<IntVector>& b;
  std::vector<IntVector>& u;
  IntegralGso g;
  Integer p, q;  // delta = p / q

  void size_reduce(std::size_t k, std::size_t l) {
    Integer two_lam = 2 * g.lambda(k, l);
    if (abs(two_lam) <= g.d[l + 1]) return;
    // nearest integer to lambda / d, halves rounded up
    Integer num = two_lam + g.d[l + 1];
    Integer den = 2 * g.d[l + 1];
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    sub_multiple(b[k], b[l], r);
    sub_multiple(u[k], u[l], r);
    g.lambda(k, l) -= r * g.d[l + 1];
    for (std::size_t i = 0; i < l; ++i) g.lambda(k, i) -= r * g.lambda(l, i);
  }

  void swap(std::size_t k) {
    const std::size_t r = b.size();
    std::swap(b[k], b[k - 1]);
    std::swap(u[k], u[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(g.lambda(k, j), g.lambda(k - 1, j));
    Integer lam = g.lambda(k, k - 1);
    Integer bb = g.d[k - 1] * g.d[k + 1] + lam * lam;
    mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), g.d[k].get_mpz_t());
    for (std::size_t i = k + 1; i < r; ++i) {
      Integer t = g.lambda(i, k);
      Integer nk = g.d[k + 1] * g.lambda(i, k - 1) - lam * t;
      mpz_divexact(nk.get_mpz_t(), nk.get_mpz_t(), g.d[k].get_mpz_t());
      Integer nk1 = bb * t + lam * nk;
      mpz_divexact(nk1.get_mpz_t(), nk1.get_mpz_t(), g.d[k + 1].get_mpz_t());
      g.lambda(i, k) = nk;
      g.lambda(i, k - 1) = nk1;
    }
    g.d[k] = bb;
  }

  void run() {
    const std::size_t r = b.size();
    std::size_t k = 1;
    while (k < r) {
      size_reduce(k, k - 1);
      const Integer& lam = g.lambda(k, k - 1);
      // Lovasz fails: d_k d_{k-2} + lambda^2 < delta d_{k-1}^2
      if (q * (g.d[k + 1] * g.d[k - 1] + lam * lam) < p * g.d[k] * g.d[k]) {
        swap(k);
        if (k > 1) --k;
      } else {
        for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
        ++k;
      }
    }
  }
};

}  // namespace

void lll_in_place(std::vector<IntVector>& b, std::vector<IntVector>& u, const Rational& delta) {
  if (b.size() < 2) return;
  IntegralLll lll{b, u, integral_gso(b), delta.get_num(), delta.get_den()};
  lll.run();
}

void normalize_signs(std::vector<IntVector>& b, std::vector<IntVector>& u) {
  for (std::size_t c = 0; c < b.size(); ++c) {
    for (const Integer& x : b[c]) {
      if (sgn(x) == 0) continue;
      if (sgn(x) < 0) {
        for (Integer& y : b[c]) y = -y;
        for (Integer& y : u[c]) y = -y;
      }
      break;
    }
  }
}

}  // namespace detail

bool is_size_reduced(const GsoData& gso) {
  const Rational half(1, 2);
  for (std::size_t i = 0; i < gso.mu.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gso.mu(i, j)) > half) return false;
  return true;
}

bool is_lll_reduced(const GsoData& gso, const Rational& delta) {
  if (!is_size_reduced(gso)) return false;
  const auto& bs = gso.bstar_norms_sq;
  for (std::size_t i = 1; i < bs.size(); ++i) {
    const Rational& m = gso.mu(i, i - 1);
    if (m * m * bs[i - 1] + bs[i] < delta * bs[i - 1]) return false;
  }
  return true;
}

ReductionResult lll_reduce(const LatticeBasis& in, const ReductionParams& params) {
  params.validate();
  auto cols = detail::columns_of(in.basis());
  auto u = detail::columns_of(IntMatrix::identity(in.rank()));
  detail::lll_in_place(cols, u, params.delta);
  detail::normalize_signs(cols, u);
  LatticeBasis out = certify(detail::matrix_of(cols, in.ambient_dim()), ReductionStatus::LLL);
  if (!is_lll_reduced(out.gso(), params.delta))
    throw std::logic_error("LLL postcondition violated");
  return {std::move(out), detail::matrix_of(u, in.rank())};
}

}  // namespace latbb
