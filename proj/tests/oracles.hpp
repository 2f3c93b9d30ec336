#pragma once

// Brute-force reference computations used only by the tests. They share no
// code with the library beyond the Matrix container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "latbb/exactmath.hpp"
#include "latbb/reformulate.hpp"

namespace oracle {

using latbb::Integer;
using latbb::IntMatrix;
using latbb::IntVector;
using latbb::Rational;
using latbb::RatVector;

using I64Matrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t to_i64(const Integer& v) { return v.get_si(); }

/// Calls f on every point of the integer box [lo, hi] (inclusive).
inline void for_each_point(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                           const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> x = lo;
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) return;
    ++x[i];
  }
}

/// Integer points of a stacked instance, by scanning its variable box.
inline std::vector<std::vector<std::int64_t>> box_points(const latbb::FeasibilityInstance& inst) {
  const std::size_t m = inst.shape->m, n = inst.shape->n;
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) lo[j] = to_i64(inst.lower[m + j]), hi[j] = to_i64(inst.upper[m + j]);
  std::vector<std::vector<std::int64_t>> pts;
  for_each_point(lo, hi, [&](const std::vector<std::int64_t>& x) {
    for (std::size_t i = 0; i < m; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += to_i64(inst.constraint(i, j)) * x[j];
      if (s < to_i64(inst.lower[i]) || s > to_i64(inst.upper[i])) return;
    }
    pts.push_back(x);
  });
  return pts;
}

/// Shortest nonzero vector norm^2 over coefficients in [-R, R]^r.
inline Integer brute_lambda1_sq(const IntMatrix& b, std::int64_t R) {
  const std::size_t r = b.cols();
  std::optional<Integer> best;
  for_each_point(std::vector<std::int64_t>(r, -R), std::vector<std::int64_t>(r, R),
                 [&](const std::vector<std::int64_t>& c) {
                   if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) return;
                   Integer s = 0;
                   for (std::size_t i = 0; i < b.rows(); ++i) {
                     Integer e = 0;
                     for (std::size_t j = 0; j < r; ++j) e += b(i, j) * Integer(static_cast<long>(c[j]));
                     s += e * e;
                   }
                   if (!best || s < *best) best = s;
                 });
  return *best;
}

/// Determinant by Laplace expansion along the first row.
inline Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Integer d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) sub(i - 1, k++) = a(i, j);
    Integer t = a(0, c) * laplace_det(sub);
    d += (c % 2 ? -t : t);
  }
  return d;
}

/// gcd over all m x m minors, by enumerating column subsets.
inline Integer minors_gcd(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + m, true);
  Integer g = 0;
  do {
    IntMatrix sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (pick[j]) sub(i, k++) = a(i, j);
    Integer d = laplace_det(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

/// |{v in Z^n : |v|^2 <= k^2}| by scanning [-k, k]^n.
inline std::uint64_t brute_ball(std::size_t n, std::int64_t k) {
  std::uint64_t c = 0;
  for_each_point(std::vector<std::int64_t>(n, -k), std::vector<std::int64_t>(n, k),
                 [&](const std::vector<std::int64_t>& v) {
                   std::int64_t s = 0;
                   for (auto x : v) s += x * x;
                   if (s <= k * k) ++c;
                 });
  return c;
}

/// Solves the square rational system M x = rhs; nullopt when singular.
inline std::optional<RatVector> solve_square(std::vector<RatVector> m, RatVector rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

/// Maximum of <c, x> over l <= B x <= u by enumerating all vertices.
inline std::optional<Rational> vertex_max(const RatVector& c, const IntMatrix& b, const IntVector& lo,
                                          const IntVector& hi) {
  const std::size_t p = b.rows(), r = b.cols();
  std::optional<Rational> best;
  std::vector<bool> pick(p, false);
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < p; ++i)
      if (pick[i]) rows.push_back(i);
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
      std::vector<RatVector> m(r, RatVector(r));
      RatVector rhs(r);
      for (std::size_t t = 0; t < r; ++t) {
        for (std::size_t j = 0; j < r; ++j) m[t][j] = b(rows[t], j);
        rhs[t] = (mask >> t) & 1 ? hi[rows[t]] : lo[rows[t]];
      }
      auto x = solve_square(m, rhs);
      if (!x) break;
      bool ok = true;
      for (std::size_t i = 0; i < p && ok; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < r; ++j) s += b(i, j) * (*x)[j];
        ok = s >= lo[i] && s <= hi[i];
      }
      if (!ok) continue;
      Rational z = 0;
      for (std::size_t j = 0; j < r; ++j) z += c[j] * (*x)[j];
      if (!best || z > *best) best = z;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace oracle
