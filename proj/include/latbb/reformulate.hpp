#pragma once

// Rangespace and nullspace reformulations of a boxed integer feasibility
// problem  l <= (A; I) x <= w.

#include <cstddef>
#include <optional>

#include "latbb/exactmath.hpp"
#include "latbb/reduction.hpp"

namespace latbb {

/// Marks a constraint matrix stacked as (A; I) with A of shape m x n.
struct StackedShape {
  std::size_t m = 0;
  std::size_t n = 0;
};

/// l <= constraint * x <= u over x in Z^r (r = constraint.cols()).
struct FeasibilityInstance {
  IntMatrix constraint;
  IntVector lower;
  IntVector upper;
  std::optional<StackedShape> shape;

  /// Builds the (A; I) system with bounds (l1; l2) and (w1; w2).
  static FeasibilityInstance stacked(const IntMatrix& a, const IntVector& l1, const IntVector& w1,
                                     const IntVector& l2, const IntVector& w2);

  std::size_t num_vars() const noexcept { return constraint.cols(); }
  std::size_t num_rows() const noexcept { return constraint.rows(); }

  /// Throws InvalidArgument / RankDeficient on malformed input.
  void validate() const;

  bool contains(const IntVector& x) const;
  Integer bound_gap_norm_sq() const;  // |u - l|^2

  // Blocks of a stacked instance.
  IntMatrix a() const;
  IntVector l1() const;
  IntVector w1() const;
  IntVector l2() const;
  IntVector w2() const;
};

enum class ReformulationKind { Rangespace, Nullspace };
const char* to_string(ReformulationKind k) noexcept;

struct Reformulation {
  ReformulationKind kind;
  FeasibilityInstance instance;  // the reformulated system in y
  FeasibilityInstance original;
  IntMatrix U;       // rangespace: x = U y
  IntMatrix kernel;  // nullspace: x = x0 + kernel * y
  IntVector x0;
  ReductionKind reduction_used;
  ReductionParams params;

  IntVector to_original(const IntVector& y) const;
  /// Inverse map; nullopt when x is not the image of an integer y.
  std::optional<IntVector> from_original(const IntVector& x) const;
};

Reformulation rangespace(const FeasibilityInstance& inst, ReductionKind reduction,
                         const ReductionParams& params = {});
Reformulation nullspace(const FeasibilityInstance& inst, ReductionKind reduction,
                        const ReductionParams& params = {});

/// Row `index` (1-based) of U^{-1}: width(e_index, Q_R) = width(p, Q).
IntVector branching_direction(const Reformulation& ref, std::size_t index);

}  // namespace latbb
