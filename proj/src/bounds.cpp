#include <cmath>

#include "latbb/bounds.hpp"

namespace latbb {
namespace {

// A rational strictly below pi.
const Rational kPiLower(Integer("314159265358979323846"), Integer("100000000000000000000"));

Integer pow_z(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rational pow_q(const Rational& b, unsigned long e) {
  Rational r(pow_z(b.get_num(), e), pow_z(b.get_den(), e));
  r.canonicalize();
  return r;
}

Integer iroot_floor(const Integer& x, unsigned long k) {
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial(unsigned long n) {
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), n);
  return r;
}

// Does (2/pi) Gamma((i+4)/2)^{2/i} <= q hold, certified through kPiLower?
bool blichfeldt_below(std::size_t i, const Rational& q) {
  if (i % 2 == 0) {
    const unsigned long h = i / 2;
    return Rational(pow_z(2, h) * factorial(h + 1)) <= pow_q(q * kPiLower, h);
  }
  const unsigned long h = (i - 1) / 2;
  const Integer df = double_factorial(2 * h + 3);
  return Rational(pow_z(2, i) * df * df) <= pow_q(q, i) * pow_z(4, h + 2) * pow_q(kPiLower, i - 1);
}

Integer grid_numerator(std::size_t i) {
  const double approx = (2.0 / M_PI) * std::exp(std::lgamma((i + 4.0) / 2.0) * 2.0 / static_cast<double>(i));
  long j = std::max(1L, static_cast<long>(std::floor(approx * 64.0)) - 2);
  while (!blichfeldt_below(i, Rational(j, 64))) ++j;
  return j;
}

}  // namespace

HermiteBound hermite_constant_bound(std::size_t i, HermiteMethod method) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "Hermite bound needs i >= 1");
  if (method == HermiteMethod::Linear) {
    Rational v(static_cast<long>(i) + 4, 4);
    v.canonicalize();
    return {i, v, method};
  }
  if (i == 1) return {i, Rational(1), method};
  Rational v(grid_numerator(i), 64);
  v.canonicalize();
  return {i, v, method};
}

Rational hermite_gamma(std::size_t i, HermiteMethod method) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "hermite_gamma needs i >= 1");
  if (method == HermiteMethod::Linear) return hermite_constant_bound(i, method).value;
  Rational g = 1;
  for (std::size_t j = 2; j <= i; ++j) g = std::max(g, hermite_constant_bound(j, method).value);
  return g;
}

Rational fraction_bound(std::size_t n, std::size_t m, const Integer& M, const Integer& k, FractionKind which) {
  if (sgn(k) < 1 || M < 1 || m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "fraction_bound needs k, M, m, n >= 1");
  const Integer base = 2 * k + 1;
  Rational r;
  if (which == FractionKind::Rangespace)
    r = Rational(pow_z(base, n + m), pow_z(M, m));
  else
    r = Rational(2 * pow_z(base, n), pow_z(M, m));
  r.canonicalize();
  return r;
}

Integer node_count_bound(const GsoData& gso, const Rational& norm_sq_wl, std::size_t level) {
  const std::size_t r = gso.bstar_norms_sq.size();
  if (level < 1 || level > r) throw Error(ErrorCode::InvalidArgument, "level out of range");
  Integer prod = 1;
  for (std::size_t j = level - 1; j < r; ++j) prod *= isqrt_floor(norm_sq_wl / gso.bstar_norms_sq[j]) + 1;
  return prod;
}

Rational root_upper_bound(const Rational& x, unsigned k, unsigned bits) {
  if (sgn(x) < 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "root_upper_bound needs x >= 0, k >= 1");
  const Integer scale = pow_z(2, bits);
  const Rational y = x * Rational(pow_z(scale, k));
  Integer t = iroot_floor(floor_q(y), k);
  if (Rational(pow_z(t, k)) < y) ++t;
  Rational out(t, scale);
  out.canonicalize();
  return out;
}

Rational width_upper_bound(const Reformulation& ref) {
  const Integer s = ref.instance.bound_gap_norm_sq();
  const bool rkz = ref.reduction_used == ReductionKind::RKZ;
  Rational alpha = 1 / (ref.params.delta - Rational(1, 4));
  alpha.canonicalize();
  if (ref.kind == ReformulationKind::Rangespace) {
    const unsigned long r = ref.original.num_vars();
    const Integer d = gram_det(ref.original.constraint);
    if (rkz) return root_upper_bound(Rational(pow_z(Integer(r) * s, r), d), 2 * r);
    return root_upper_bound(pow_q(alpha, r * (r - 1)) * Rational(pow_z(s, 2 * r), d * d), 4 * r);
  }
  if (!ref.original.shape || ref.original.shape->m >= ref.original.shape->n)
    throw Error(ErrorCode::InvalidArgument, "nullspace width bound needs m < n");
  const IntMatrix a = ref.original.a();
  const unsigned long d = ref.original.shape->n - ref.original.shape->m;
  const Integer g = gcd_of_maximal_minors(a);
  const Integer da = determinant(a * a.transpose());
  if (rkz) return root_upper_bound(Rational(pow_z(g, 2 * d) * pow_z(Integer(d) * s, d), da), 2 * d);
  return root_upper_bound(pow_q(alpha, d * (d - 1)) * Rational(pow_z(g, 4 * d) * pow_z(s, 2 * d), da * da), 4 * d);
}

const char* to_string(ThresholdVariant v) noexcept {
  switch (v) {
    case ThresholdVariant::RkzRange: return "rkz-range";
    case ThresholdVariant::RkzNull: return "rkz-null";
    case ThresholdVariant::LllRange: return "lll-range";
    case ThresholdVariant::LllNull: return "lll-null";
    case ThresholdVariant::TableActual: return "table";
  }
  return "?";
}

ThresholdVariant parse_threshold_variant(const std::string& s) {
  for (auto v : {ThresholdVariant::RkzRange, ThresholdVariant::RkzNull, ThresholdVariant::LllRange,
                 ThresholdVariant::LllNull, ThresholdVariant::TableActual})
    if (s == to_string(v)) return v;
  throw Error(ErrorCode::InvalidArgument, "unknown threshold variant: " + s);
}

void ThresholdQuery::validate() const {
  if (m < 1 || m >= n) throw Error(ErrorCode::InvalidArgument, "threshold query needs 1 <= m < n");
  if (sgn(epsilon) <= 0 || epsilon >= 1) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
  if (sgn(norm_sq_bound) < 0) throw Error(ErrorCode::NegativeInput, "norm_sq_bound must be nonnegative");
}

ThresholdResult m_threshold(const ThresholdQuery& q) {
  q.validate();
  ThresholdResult res;
  const unsigned long n = q.n, m = q.m;
  const Integer& s = q.norm_sq_bound;
  Rational x;
  unsigned long root = 2 * m;
  switch (q.variant) {
    case ThresholdVariant::RkzRange: x = pow_z(4 * Integer(n * n) * s, n + m); break;
    case ThresholdVariant::RkzNull: x = pow_z(144 * Integer((n - m) * (n - m)) * s, n); break;
    case ThresholdVariant::LllRange: x = pow_z(pow_z(2, n + 4) * s, n + m); break;
    case ThresholdVariant::LllNull: x = pow_z(pow_z(2, n - m + 4) * s, n); break;
    case ThresholdVariant::TableActual: {
      res.gamma = hermite_gamma(n - m, q.hermite);
      const Rational r2 = res.gamma * res.gamma * s;
      res.k = isqrt_floor(r2);
      if (Rational(res.k * res.k) < r2) ++res.k;
      res.radius_sq = q.radius == RadiusMode::Exact ? floor_q(r2) : Integer(res.k * res.k);
      if (!res.radius_sq.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "ball radius too large");
      res.ball_points = count_ball_points_sq(n, res.radius_sq.get_ui());
      x = Rational(res.ball_points) / q.epsilon;
      x *= q.chi == ChiExponent::RootM ? Rational(2) : Rational(pow_z(2, m));
      root = m;
      break;
    }
  }
  res.M = iroot_floor(floor_q(x), root) + 1;
  return res;
}

std::vector<Table1Row> table1(ChiExponent chi, RadiusMode radius) {
  const std::pair<std::size_t, std::size_t> dims[] = {{30, 20}, {50, 20}, {50, 30}, {60, 30}, {70, 40}};
  std::vector<Table1Row> rows;
  for (auto [n, m] : dims) {
    ThresholdQuery q;
    q.n = n;
    q.m = m;
    q.norm_sq_bound = static_cast<unsigned long>(n);
    q.chi = chi;
    q.radius = radius;
    q.epsilon = Rational(1, 10);
    Integer a = m_threshold(q).M;
    q.epsilon = Rational(1, 100);
    rows.push_back({n, m, a, m_threshold(q).M});
  }
  return rows;
}

}  // namespace latbb
