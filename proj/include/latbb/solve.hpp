#pragma once

// Exact rational LP over boxed systems l <= B x <= u (x free), widths, and
// depth-first branch-and-bound with per-level node accounting.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latbb/exactmath.hpp"
#include "latbb/reformulate.hpp"

namespace latbb {

enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector point;
};

LpResult lp_optimize(Sense sense, const IntVector& objective, const FeasibilityInstance& inst);
LpResult lp_optimize(Sense sense, const RatVector& objective, const IntMatrix& b, const IntVector& lower,
                     const IntVector& upper);

/// [min, max] of <z, x> over the relaxation; nullopt when it is empty.
std::optional<std::pair<Rational, Rational>> lp_range(const RatVector& z, const IntMatrix& b,
                                                      const IntVector& lower, const IntVector& upper);

/// max <z,x> - min <z,x>; `feasible` false when the relaxation is empty.
struct Width {
  bool feasible = false;
  Rational value;
};

Width width(const IntVector& z, const FeasibilityInstance& inst);

struct BnbOptions {
  bool count_all = false;       // enumerate every integer point instead of stopping at the first
  std::uint64_t node_limit = 0;  // 0 means unlimited
};

struct BnbReport {
  bool feasible = false;
  IntVector witness;
  std::vector<std::uint64_t> nodes_per_level;  // index = branching depth
  std::vector<std::size_t> level_variable;      // 1-based variable fixed at each depth
  std::uint64_t total_nodes = 0;
  bool solved_at_root = true;
  std::uint64_t solutions = 0;  // integer points found (all of them under count_all)
  std::uint64_t lp_solves = 0;
  bool aborted = false;  // node_limit hit
  double seconds = 0.0;
};

/// Branches on x_r, x_{r-1}, ..., x_1.
BnbReport reverse_bnb(const FeasibilityInstance& inst, const BnbOptions& opts = {});

/// `order` is a 1-based permutation; order[0] is branched on first.
BnbReport bnb_with_order(const FeasibilityInstance& inst, const std::vector<std::size_t>& order,
                         const BnbOptions& opts = {});

}  // namespace latbb
