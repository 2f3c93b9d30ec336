#include <cmath>

#include "reduction_internal.hpp"

namespace latbb {
namespace detail {

namespace {

// Pruning uses the double-precision GSO; every leaf is re-evaluated exactly,
// so the slack only has to cover rounding in the partial norms.
constexpr double kRadiusSlack = 1e-6;

class Enumerator {
 public:
  Enumerator(const IntegralGso& g, std::size_t level, std::size_t r) : dim_(r - level) {
    bq_.resize(dim_);
    b_.resize(dim_);
    muq_ = RatMatrix(dim_, dim_);
    mu_.assign(dim_ * dim_, 0.0);
    for (std::size_t a = 0; a < dim_; ++a) {
      bq_[a] = g.bstar_sq(level + a);
      b_[a] = bq_[a].get_d();
      for (std::size_t c = 0; c < a; ++c) {
        muq_(a, c) = g.mu(level + a, level + c);
        mu_[a * dim_ + c] = muq_(a, c).get_d();
      }
    }
    x_.assign(dim_, 0);
    best_.assign(dim_, 0);
    best_[0] = 1;
    best_norm_ = bq_[0];
    set_radius();
  }

  ProjectedSvp run() {
    recurse(dim_ - 1, 0.0, true);
    IntVector coeffs(dim_);
    for (std::size_t a = 0; a < dim_; ++a) coeffs[a] = static_cast<long>(best_[a]);
    return {std::move(coeffs), best_norm_};
  }

 private:
  void set_radius() { radius_ = best_norm_.get_d() * (1.0 + kRadiusSlack); }

  void recurse(std::size_t k, double partial, bool top_zero) {
    double center = 0.0;
    for (std::size_t j = k + 1; j < dim_; ++j) center -= static_cast<double>(x_[j]) * mu_[j * dim_ + k];
    if (top_zero) {
      // Symmetry: the highest nonzero coefficient is positive.
      for (long v = 0;; ++v) {
        const double p = partial + static_cast<double>(v) * v * b_[k];
        if (p > radius_) break;
        x_[k] = v;
        if (k == 0) {
          if (v != 0) leaf();
        } else {
          recurse(k - 1, p, v == 0);
        }
      }
      x_[k] = 0;
      return;
    }
    // Schnorr-Euchner zig-zag: visit values in order of distance from the center.
    const long v0 = std::lround(center);
    long up = v0 + 1, down = v0 - 1;
    bool up_open = true, down_open = true;
    if (!visit(k, partial, center, v0)) return restore(k);
    while (up_open || down_open) {
      const bool take_up =
          up_open && (!down_open || std::fabs(static_cast<double>(up) - center) <=
                                         std::fabs(static_cast<double>(down) - center));
      if (take_up) {
        if (visit(k, partial, center, up)) ++up; else up_open = false;
      } else {
        if (visit(k, partial, center, down)) --down; else down_open = false;
      }
    }
    x_[k] = 0;
  }

  void restore(std::size_t k) { x_[k] = 0; }

  // Returns false once v lies outside the (current) radius.
  bool visit(std::size_t k, double partial, double center, long v) {
    const double diff = static_cast<double>(v) - center;
    const double p = partial + diff * diff * b_[k];
    if (p > radius_) return false;
    x_[k] = v;
    if (k == 0) leaf(); else recurse(k - 1, p, false);
    return true;
  }

  void leaf() {
    // Exact squared norm of the projection sum_a x_a b_a(level).
    Rational norm = 0;
    for (std::size_t a = 0; a < dim_; ++a) {
      Rational coord = x_[a];
      for (std::size_t j = a + 1; j < dim_; ++j)
        if (x_[j] != 0) coord += muq_(j, a) * x_[j];
      norm += coord * coord * bq_[a];
    }
    const int cmp = ::cmp(norm, best_norm_);
    if (cmp > 0) return;
    if (cmp == 0 && !reverse_lex_less()) return;
    best_ = x_;
    best_norm_ = norm;
    set_radius();
  }

  bool reverse_lex_less() const {
    for (std::size_t a = dim_; a-- > 0;)
      if (x_[a] != best_[a]) return x_[a] < best_[a];
    return false;
  }

  std::size_t dim_;
  std::vector<Rational> bq_;
  RatMatrix muq_;
  std::vector<double> b_;
  std::vector<double> mu_;
  std::vector<long> x_;
  std::vector<long> best_;
  Rational best_norm_;
  double radius_ = 0.0;
};

}  // namespace

ProjectedSvp enumerate_projected(const std::vector<IntVector>& b, std::size_t level) {
  IntegralGso g = integral_gso(b);
  Enumerator e(g, level, b.size());
  return e.run();
}

}  // namespace detail

ShortestVector shortest_vector(const LatticeBasis& in, const ReductionParams& params) {
  params.validate();
  if (in.rank() > params.svp_dim_cap)
    throw Error(ErrorCode::DimensionCapExceeded,
                "rank " + std::to_string(in.rank()) + " exceeds svp_dim_cap " + std::to_string(params.svp_dim_cap));
  auto cols = detail::columns_of(in.basis());
  auto u = detail::columns_of(IntMatrix::identity(in.rank()));
  detail::lll_in_place(cols, u, params.delta);
  detail::ProjectedSvp svp = detail::enumerate_projected(cols, 0);

  ShortestVector out{IntVector(in.ambient_dim()), 0, IntVector(in.rank())};
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (sgn(svp.coeffs[j]) == 0) continue;
    for (std::size_t i = 0; i < out.vector.size(); ++i) out.vector[i] += svp.coeffs[j] * cols[j][i];
    for (std::size_t i = 0; i < out.coefficients.size(); ++i) out.coefficients[i] += svp.coeffs[j] * u[j][i];
  }
  out.norm_sq = norm_sq(out.vector);
  return out;
}

}  // namespace latbb
