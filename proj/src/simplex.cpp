#include <stdexcept>

#include "latbb/solve.hpp"

namespace latbb {
namespace {

// Bounded-variable simplex on the tableau of s = B x. Variables 0..r-1 are the
// free x, r..r+p-1 the bounded slacks s. Every x is pivoted into the basis
// once and never leaves; both phases use smallest-index rules.
class BoxedSimplex {
 public:
  BoxedSimplex(const IntMatrix& b, const IntVector& lower, const IntVector& upper)
      : p_(b.rows()), r_(b.cols()), t_(p_, r_), basic_(p_), nonbasic_(r_), nb_val_(r_), lo_(lower), hi_(upper) {
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < r_; ++j) t_(i, j) = b(i, j);
    for (std::size_t i = 0; i < p_; ++i) basic_[i] = r_ + i;
    for (std::size_t j = 0; j < r_; ++j) nonbasic_[j] = j;
    for (std::size_t j = 0; j < r_; ++j) {
      std::size_t k = p_;
      for (std::size_t i = 0; i < p_; ++i)
        if (basic_[i] >= r_ && sgn(t_(i, j)) != 0) {
          k = i;
          break;
        }
      if (k == p_) throw Error(ErrorCode::RankDeficient, "LP constraint matrix must have full column rank");
      pivot(k, j);
      nb_val_[j] = lo(nonbasic_[j]);
    }
  }

  // Dual simplex with zero costs: every basis is dual feasible.
  bool find_feasible() {
    for (;;) {
      update_values();
      std::size_t k = p_;
      for (std::size_t i = 0; i < p_; ++i) {
        if (basic_[i] < r_) continue;
        if ((val_[i] < lo(basic_[i]) || val_[i] > hi(basic_[i])) && (k == p_ || basic_[i] < basic_[k])) k = i;
      }
      if (k == p_) return true;
      const bool raise = val_[k] < lo(basic_[k]);
      std::size_t j = r_;
      for (std::size_t c = 0; c < r_; ++c) {
        const std::size_t v = nonbasic_[c];
        if (lo(v) == hi(v)) continue;
        const int s = sgn(t_(k, c));
        if (s == 0) continue;
        const bool at_lo = nb_val_[c] == lo(v);
        const bool ok = raise ? (at_lo ? s > 0 : s < 0) : (at_lo ? s < 0 : s > 0);
        if (ok && (j == r_ || v < nonbasic_[j])) j = c;
      }
      if (j == r_) return false;
      const std::size_t leaving = basic_[k];
      pivot(k, j);
      nb_val_[j] = raise ? lo(leaving) : hi(leaving);
      guard();
    }
  }

  // Primal simplex from a feasible basis; returns max <c, x>.
  Rational maximize(const RatVector& c) {
    for (;;) {
      update_values();
      std::size_t j = r_;
      int dir = 0;
      for (std::size_t col = 0; col < r_; ++col) {
        const std::size_t v = nonbasic_[col];
        if (lo(v) == hi(v)) continue;
        Rational d = 0;
        for (std::size_t i = 0; i < p_; ++i)
          if (basic_[i] < r_ && sgn(c[basic_[i]]) != 0) d += c[basic_[i]] * t_(i, col);
        const bool at_lo = nb_val_[col] == lo(v);
        const int s = sgn(d);
        if ((s > 0 && at_lo) || (s < 0 && !at_lo)) {
          if (j == r_ || v < nonbasic_[j]) {
            j = col;
            dir = at_lo ? 1 : -1;
          }
        }
      }
      if (j == r_) break;

      const std::size_t entering = nonbasic_[j];
      Rational best = Rational(hi(entering) - lo(entering));
      std::size_t best_var = entering, best_row = p_;
      for (std::size_t i = 0; i < p_; ++i) {
        if (basic_[i] < r_) continue;
        const Rational rate = dir * t_(i, j);
        const int s = sgn(rate);
        if (s == 0) continue;
        Rational lim = s > 0 ? Rational((hi(basic_[i]) - val_[i]) / rate) : Rational((val_[i] - lo(basic_[i])) / (-rate));
        if (lim < best || (lim == best && basic_[i] < best_var)) {
          best = lim;
          best_var = basic_[i];
          best_row = i;
        }
      }
      if (best_row == p_) {
        nb_val_[j] = dir > 0 ? Rational(hi(entering)) : Rational(lo(entering));
      } else {
        const bool to_hi = sgn(dir * t_(best_row, j)) > 0;
        pivot(best_row, j);
        nb_val_[j] = to_hi ? hi(best_var) : lo(best_var);
      }
      guard();
    }
    Rational z = 0;
    const RatVector xs = x();
    for (std::size_t i = 0; i < r_; ++i) z += c[i] * xs[i];
    return z;
  }

  RatVector x() const {
    RatVector out(r_);
    for (std::size_t i = 0; i < p_; ++i)
      if (basic_[i] < r_) out[basic_[i]] = val_[i];
    return out;
  }

 private:
  Rational lo(std::size_t v) const { return Rational(lo_[v - r_]); }
  Rational hi(std::size_t v) const { return Rational(hi_[v - r_]); }

  void pivot(std::size_t k, std::size_t j) {
    const Rational inv = 1 / t_(k, j);
    for (std::size_t l = 0; l < r_; ++l) t_(k, l) = l == j ? inv : Rational(-t_(k, l) * inv);
    for (std::size_t i = 0; i < p_; ++i) {
      if (i == k) continue;
      const Rational f = t_(i, j);
      if (sgn(f) == 0) continue;
      for (std::size_t l = 0; l < r_; ++l) {
        if (l == j)
          t_(i, l) = f * t_(k, j);
        else if (sgn(t_(k, l)) != 0)
          t_(i, l) += f * t_(k, l);
      }
    }
    std::swap(basic_[k], nonbasic_[j]);
  }

  void update_values() {
    val_.assign(p_, Rational(0));
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        if (sgn(t_(i, j)) != 0) val_[i] += t_(i, j) * nb_val_[j];
  }

  void guard() {
    if (++pivots_ > 1000000) throw std::logic_error("simplex pivot limit exceeded");
  }

  std::size_t p_, r_;
  RatMatrix t_;
  std::vector<std::size_t> basic_, nonbasic_;
  RatVector nb_val_, val_;
  IntVector lo_, hi_;
  std::size_t pivots_ = 0;
};

void check_shapes(const IntMatrix& b, const IntVector& lower, const IntVector& upper) {
  if (b.rows() == 0 || b.cols() == 0 || lower.size() != b.rows() || upper.size() != b.rows())
    throw Error(ErrorCode::InvalidArgument, "LP shape mismatch");
}

// One free variable: intersect the per-row intervals.
std::optional<std::pair<Rational, Rational>> interval_1d(const IntMatrix& b, const IntVector& lower,
                                                         const IntVector& upper) {
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const int s = sgn(b(i, 0));
    if (s == 0) {
      if (lower[i] > 0 || upper[i] < 0) return std::nullopt;
      continue;
    }
    Rational a(lower[i], b(i, 0)), c(upper[i], b(i, 0));
    a.canonicalize();
    c.canonicalize();
    if (s < 0) std::swap(a, c);
    if (!lo || a > *lo) lo = a;
    if (!hi || c < *hi) hi = c;
  }
  if (!lo || !hi) throw Error(ErrorCode::Unbounded, "variable is unconstrained");
  if (*lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace

LpResult lp_optimize(Sense sense, const RatVector& objective, const IntMatrix& b, const IntVector& lower,
                     const IntVector& upper) {
  check_shapes(b, lower, upper);
  if (objective.size() != b.cols()) throw Error(ErrorCode::InvalidArgument, "objective length mismatch");
  BoxedSimplex lp(b, lower, upper);
  LpResult res;
  if (!lp.find_feasible()) return res;
  RatVector c = objective;
  if (sense == Sense::Minimize)
    for (auto& v : c) v = -v;
  res.status = LpStatus::Optimal;
  res.value = lp.maximize(c);
  if (sense == Sense::Minimize) res.value = -res.value;
  res.point = lp.x();
  return res;
}

LpResult lp_optimize(Sense sense, const IntVector& objective, const FeasibilityInstance& inst) {
  RatVector c(objective.begin(), objective.end());
  return lp_optimize(sense, c, inst.constraint, inst.lower, inst.upper);
}

std::optional<std::pair<Rational, Rational>> lp_range(const RatVector& z, const IntMatrix& b, const IntVector& lower,
                                                      const IntVector& upper) {
  check_shapes(b, lower, upper);
  if (b.cols() == 1) {
    auto iv = interval_1d(b, lower, upper);
    if (!iv) return iv;
    if (sgn(z[0]) >= 0) return std::make_pair(z[0] * iv->first, z[0] * iv->second);
    return std::make_pair(z[0] * iv->second, z[0] * iv->first);
  }
  BoxedSimplex lp(b, lower, upper);
  if (!lp.find_feasible()) return std::nullopt;
  Rational hi = lp.maximize(z);
  RatVector neg = z;
  for (auto& v : neg) v = -v;
  Rational lo = -lp.maximize(neg);
  return std::make_pair(lo, hi);
}

Width width(const IntVector& z, const FeasibilityInstance& inst) {
  RatVector c(z.begin(), z.end());
  auto range = lp_range(c, inst.constraint, inst.lower, inst.upper);
  if (!range) return {};
  return {true, range->second - range->first};
}

}  // namespace latbb
