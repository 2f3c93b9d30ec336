#include <random>

#include "doctest.h"
#include "latbb/exactmath.hpp"
#include "oracles.hpp"

using namespace latbb;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

void check_gso(const IntMatrix& b) {
  const GsoData g = gram_schmidt(b);
  const std::size_t r = b.cols();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t row = 0; row < b.rows(); ++row) {
      Rational v = g.bstar(row, i);
      for (std::size_t j = 0; j < i; ++j) v += g.mu(i, j) * g.bstar(row, j);
      CHECK(v == Rational(b(row, i)));
    }
    for (std::size_t j = 0; j < i; ++j) CHECK(dot(g.bstar.column(i), g.bstar.column(j)) == 0);
  }
  Rational prod = 1;
  for (const auto& q : g.bstar_norms_sq) prod *= q;
  CHECK(prod == Rational(gram_det(b)));
}

}  // namespace

TEST_CASE("gram_schmidt examples") {
  const GsoData id = gram_schmidt(IntMatrix::identity(2));
  CHECK(id.bstar == RatMatrix::identity(2));
  CHECK(id.mu(1, 0) == 0);

  const GsoData ex = gram_schmidt(IntMatrix{{41, 38}, {1, 0}, {0, 1}});
  CHECK(ex.mu(1, 0) == Rational(779, 841));
  CHECK(ex.bstar(0, 0) == 41);
  CHECK(ex.bstar(0, 1) == Rational(38) - Rational(779, 841) * 41);
  CHECK(ex.bstar(2, 1) == 1);

  const GsoData h = gram_schmidt(IntMatrix{{2, 1}, {0, 2}});
  CHECK(h.mu(1, 0) == Rational(1, 2));
  CHECK(h.bstar(0, 1) == 0);
  CHECK(h.bstar(1, 1) == 2);

  CHECK_THROWS_AS(gram_schmidt(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("gram_schmidt reconstructs random bases") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    IntMatrix b = random_matrix(rng, 4, 3, -9, 9);
    if (rank(b) < 3) continue;
    check_gso(b);
  }
}

TEST_CASE("hnf examples and shape") {
  HnfResult id = hnf(IntMatrix::identity(3));
  CHECK(id.H == IntMatrix::identity(3));
  CHECK(id.V == IntMatrix::identity(3));
  CHECK(hnf(IntMatrix{{4, 6}}).H == IntMatrix{{2, 0}});
  CHECK(hnf(IntMatrix{{41, 38}}).H == IntMatrix{{1, 0}});

  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = random_matrix(rng, 3, 5, -12, 12);
    const HnfResult h = hnf(m);
    CHECK(m * h.V == h.H);
    const Integer d = determinant(h.V);
    CHECK(abs(d) == 1);
    for (std::size_t j = 0; j < h.rank; ++j) {
      const std::size_t p = h.pivot_rows[j];
      CHECK(h.H(p, j) > 0);
      for (std::size_t i = 0; i < p; ++i) CHECK(h.H(i, j) == 0);
      for (std::size_t k = 0; k < j; ++k) {
        CHECK(h.H(p, k) >= 0);
        CHECK(h.H(p, k) < h.H(p, j));
      }
    }
    for (std::size_t j = h.rank; j < m.cols(); ++j)
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(h.H(i, j) == 0);
  }
}

TEST_CASE("kernel_basis generates every integral kernel point") {
  const IntMatrix k = kernel_basis(IntMatrix{{41, 38}});
  REQUIRE(k.cols() == 1);
  CHECK((k.column(0) == IntVector{38, -41} || k.column(0) == IntVector{-38, 41}));
  CHECK(kernel_basis(IntMatrix{{1, 0}}) == IntMatrix{{0}, {1}});
  IntMatrix k3 = kernel_basis(IntMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK((k3.column(0) == IntVector{0, 0, 1} || k3.column(0) == IntVector{0, 0, -1}));
  CHECK_THROWS_AS(kernel_basis(IntMatrix{{1, 2}, {2, 4}}), Error);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 12; ++t) {
    const std::size_t m = 1 + t % 2, n = 3 + t % 2;
    const IntMatrix a = random_matrix(rng, m, n, -10, 10);
    if (rank(a) < m) continue;
    const IntMatrix kb = kernel_basis(a);
    REQUIRE(kb.cols() == n - m);
    const IntMatrix ak = a * kb;
    for (const auto& v : ak.data()) CHECK(v == 0);
    // Every kernel point in a small box lies in the integer span of kb.
    const HnfResult hk = hnf(kb);
    oracle::for_each_point(std::vector<std::int64_t>(n, -6), std::vector<std::int64_t>(n, 6),
                           [&](const std::vector<std::int64_t>& x) {
                             IntVector xv(n);
                             for (std::size_t i = 0; i < n; ++i) xv[i] = static_cast<long>(x[i]);
                             IntVector ax = a * xv;
                             if (!std::all_of(ax.begin(), ax.end(), [](const Integer& v) { return v == 0; })) return;
                             // Solve kb * c = x via the HNF (lower echelon).
                             bool ok = true;
                             IntVector rest = xv;
                             for (std::size_t j = 0; j < hk.rank; ++j) {
                               const std::size_t p = hk.pivot_rows[j];
                               Integer q, rem;
                               mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rest[p].get_mpz_t(), hk.H(p, j).get_mpz_t());
                               if (rem != 0) ok = false;
                               for (std::size_t i = 0; i < n; ++i) rest[i] -= q * hk.H(i, j);
                             }
                             for (const auto& v : rest)
                               if (v != 0) ok = false;
                             CHECK(ok);
                           });
  }
}

TEST_CASE("solve_integral") {
  const IntMatrix a{{41, 38}};
  const IntVector x0 = solve_integral(a, {207});
  CHECK(a * x0 == IntVector{207});
  CHECK_THROWS_AS(solve_integral(IntMatrix{{2, 4}}, {3}), Error);
  try {
    solve_integral(IntMatrix{{2, 4}}, {3});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoIntegralSolution);
  }
  CHECK(solve_integral(IntMatrix::identity(3), {5, -2, 7}) == IntVector{5, -2, 7});
}

TEST_CASE("gram_det") {
  CHECK(gram_det(IntMatrix{{41, 38}, {1, 0}, {0, 1}}) == 3126);
  CHECK(gram_det(IntMatrix::identity(4)) == 1);
  CHECK(gram_det(IntMatrix{{38}, {-41}}) == 3125);
}

TEST_CASE("gcd_of_maximal_minors against minor enumeration") {
  CHECK(gcd_of_maximal_minors(IntMatrix{{41, 38}}) == 1);
  CHECK(gcd_of_maximal_minors(IntMatrix{{2, 4}}) == 2);
  CHECK(gcd_of_maximal_minors(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK_THROWS_AS(gcd_of_maximal_minors(IntMatrix{{1, 2}, {2, 4}}), Error);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + t % 3, n = m + 1 + t % 2;
    IntMatrix a = random_matrix(rng, m, n, -8, 8);
    for (std::size_t j = 0; j < n; ++j) a(0, j) *= 2;  // force nontrivial gcds
    if (rank(a) < m) continue;
    CHECK(gcd_of_maximal_minors(a) == oracle::minors_gcd(a));
  }
}

TEST_CASE("isqrt_floor") {
  CHECK(isqrt_floor(Rational(0)) == 0);
  CHECK(isqrt_floor(Rational(3125)) == 55);
  CHECK(isqrt_floor(Rational(9, 4)) == 1);
  for (long t = 1; t < 300; ++t) {
    CHECK(isqrt_floor(Rational(t * t)) == t);
    CHECK(isqrt_floor(Rational(t * t - 1)) == t - 1);
  }
  CHECK_THROWS_AS(isqrt_floor(Rational(-1, 2)), Error);
}

TEST_CASE("rational helpers") {
  CHECK(floor_q(Rational(-7, 2)) == -4);
  CHECK(ceil_q(Rational(-7, 2)) == -3);
  CHECK(round_q(Rational(5, 2)) == 3);
  CHECK(round_q(Rational(-5, 2)) == -2);
  CHECK(determinant(IntMatrix{{2, 1}, {7, 4}}) == 1);
  const IntMatrix u{{2, 1}, {7, 4}};
  CHECK(u * inverse_unimodular(u) == IntMatrix::identity(2));
}
