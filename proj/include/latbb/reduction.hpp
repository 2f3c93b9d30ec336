#pragma once

// Lattice basis reduction over exact integers: LLL, Korkine-Zolotarev via
// shortest-vector enumeration, reciprocal bases and reciprocal-KZ.

#include <cstddef>
#include <string>

#include "latbb/exactmath.hpp"

namespace latbb {

enum class ReductionStatus { Raw, LLL, KZ, RKZ };
enum class ReductionKind { LLL, KZ, RKZ };

const char* to_string(ReductionStatus s) noexcept;
const char* to_string(ReductionKind k) noexcept;
ReductionKind parse_reduction_kind(const std::string& s);

struct ReductionParams {
  Rational delta{3, 4};
  std::size_t svp_dim_cap = 34;

  void validate() const;
};

/// Integer basis (columns) with its exact Gram-Schmidt data.
class LatticeBasis {
 public:
  explicit LatticeBasis(IntMatrix basis);

  const IntMatrix& basis() const noexcept { return basis_; }
  const GsoData& gso() const noexcept { return gso_; }
  ReductionStatus status() const noexcept { return status_; }
  std::size_t rank() const noexcept { return basis_.cols(); }
  std::size_t ambient_dim() const noexcept { return basis_.rows(); }

 private:
  LatticeBasis(IntMatrix basis, ReductionStatus status);

  IntMatrix basis_;
  GsoData gso_;
  ReductionStatus status_ = ReductionStatus::Raw;

  friend LatticeBasis certify(IntMatrix basis, ReductionStatus status);
};

/// output.basis() == input.basis() * U, |det U| = 1.
struct ReductionResult {
  LatticeBasis basis;
  IntMatrix U;
};

struct ShortestVector {
  IntVector vector;
  Integer norm_sq;
  IntVector coefficients;  // w.r.t. the input basis
};

ReductionResult lll_reduce(const LatticeBasis& in, const ReductionParams& params = {});
ShortestVector shortest_vector(const LatticeBasis& in, const ReductionParams& params = {});
ReductionResult kz_reduce(const LatticeBasis& in, const ReductionParams& params = {});
ReductionResult rkz_reduce(const LatticeBasis& in, const ReductionParams& params = {});
ReductionResult reduce(const LatticeBasis& in, ReductionKind kind, const ReductionParams& params = {});

/// The b_1', ..., b_r' in lin L with <b_i, b_j'> = 1 iff i + j = r + 1.
RatMatrix reciprocal_basis(const RatMatrix& basis);
RatMatrix reciprocal_basis(const LatticeBasis& in);

/// Smallest positive integer multiple that makes every entry integral.
IntMatrix clear_denominators(const RatMatrix& m, Integer* scale = nullptr);

// Exact reducedness checkers.
bool is_size_reduced(const GsoData& gso);
bool is_lll_reduced(const GsoData& gso, const Rational& delta = Rational(3, 4));
bool is_kz_reduced(const IntMatrix& basis, const ReductionParams& params = {});
bool is_rkz_reduced(const IntMatrix& basis, const ReductionParams& params = {});

/// Basis of the projected lattice L_i (1-based level), scaled to integers.
IntMatrix projected_lattice(const IntMatrix& basis, std::size_t level, Integer* scale = nullptr);

}  // namespace latbb
