#pragma once

// Certified closed-form and combinatorial bounds: Hermite-constant
// estimates, lattice points in balls, fraction bounds, node-count and width
// bounds, and the M-threshold calculator.

#include <cstddef>
#include <vector>

#include "latbb/exactmath.hpp"
#include "latbb/reformulate.hpp"

namespace latbb {

enum class HermiteMethod { Linear, Blichfeldt };

struct HermiteBound {
  std::size_t i = 1;
  Rational value;
  HermiteMethod method = HermiteMethod::Blichfeldt;
};

/// Upper bound on C_i: Linear 1 + i/4; Blichfeldt (2/pi) Gamma((i+4)/2)^{2/i}
/// rounded up to a multiple of 1/64 (C_1 = 1 exactly).
HermiteBound hermite_constant_bound(std::size_t i, HermiteMethod method);

/// Bound on gamma_i = max(C_1, ..., C_i).
Rational hermite_gamma(std::size_t i, HermiteMethod method);

/// |{v in Z^n : |v|^2 <= k^2}|.
Integer count_ball_points(std::size_t n, const Integer& k);
/// |{v in Z^n : |v|^2 <= budget}|; the DP is OpenMP-parallel over budgets.
Integer count_ball_points_sq(std::size_t n, std::size_t budget);
Integer count_ball_points_sq_serial(std::size_t n, std::size_t budget);

enum class FractionKind { Rangespace, Nullspace };

/// (2k+1)^{n+m} / M^m  or  (2k+1)^n / (M^m / 2).
Rational fraction_bound(std::size_t n, std::size_t m, const Integer& M, const Integer& k, FractionKind which);

/// prod_{j=level..r} (floor(sqrt(norm_sq_wl / |b_j*|^2)) + 1), level 1-based.
Integer node_count_bound(const GsoData& gso, const Rational& norm_sq_wl, std::size_t level);

/// Certified rational upper bound on the width of the reformulated
/// polyhedron along its last unit vector.
Rational width_upper_bound(const Reformulation& ref);

/// Smallest a / 2^bits with (a / 2^bits)^k >= x.
Rational root_upper_bound(const Rational& x, unsigned k, unsigned bits = 32);

enum class ThresholdVariant { RkzRange, RkzNull, LllRange, LllNull, TableActual };
enum class ChiExponent { RootM, Full };
enum class RadiusMode { Exact, CeilInteger };

const char* to_string(ThresholdVariant v) noexcept;
ThresholdVariant parse_threshold_variant(const std::string& s);

struct ThresholdQuery {
  std::size_t n = 0;
  std::size_t m = 0;
  Integer norm_sq_bound;
  Rational epsilon;
  ThresholdVariant variant = ThresholdVariant::TableActual;
  ChiExponent chi = ChiExponent::RootM;
  RadiusMode radius = RadiusMode::Exact;
  HermiteMethod hermite = HermiteMethod::Blichfeldt;

  void validate() const;
};

struct ThresholdResult {
  Integer M;
  Rational gamma;     // TableActual only
  Integer radius_sq;  // squared radius budget of the ball count
  Integer k;          // ceil of the radius
  Integer ball_points;
};

ThresholdResult m_threshold(const ThresholdQuery& q);

struct Table1Row {
  std::size_t n, m;
  Integer m_eps_01, m_eps_001;
};

/// The five (n, m) rows of the binary-box table at eps = 1/10 and 1/100.
std::vector<Table1Row> table1(ChiExponent chi = ChiExponent::RootM, RadiusMode radius = RadiusMode::Exact);

}  // namespace latbb
