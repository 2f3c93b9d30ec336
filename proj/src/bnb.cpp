#include <algorithm>
#include <chrono>

#include "latbb/solve.hpp"

namespace latbb {
namespace {

struct Search {
  const FeasibilityInstance& inst;
  const std::vector<std::size_t>& order;  // 0-based
  const BnbOptions& opts;
  BnbReport& rep;
  IntVector fixed;
  bool stop = false;

  // Variables order[0..depth) are fixed in `fixed`.
  void node(std::size_t depth) {
    const std::size_t r = order.size(), p = inst.num_rows();
    const std::size_t nfree = r - depth;
    IntMatrix b(p, nfree);
    IntVector lo = inst.lower, hi = inst.upper;
    for (std::size_t i = 0; i < p; ++i) {
      Integer shift = 0;
      for (std::size_t t = 0; t < depth; ++t) shift += inst.constraint(i, order[t]) * fixed[order[t]];
      lo[i] -= shift;
      hi[i] -= shift;
      for (std::size_t c = 0; c < nfree; ++c) b(i, c) = inst.constraint(i, order[depth + c]);
    }
    RatVector z(nfree, Rational(0));
    z[0] = 1;
    ++rep.lp_solves;
    auto range = lp_range(z, b, lo, hi);
    if (!range) return;
    const Integer first = ceil_q(range->first), last = floor_q(range->second);
    for (Integer g = first; g <= last && !stop; ++g) {
      ++rep.nodes_per_level[depth];
      ++rep.total_nodes;
      fixed[order[depth]] = g;
      if (opts.node_limit != 0 && rep.total_nodes >= opts.node_limit && depth + 1 < r) {
        rep.aborted = true;
        stop = true;
        return;
      }
      if (depth + 1 == r) {
        if (!inst.contains(fixed)) throw std::logic_error("branch-and-bound leaf violates constraints");
        ++rep.solutions;
        if (!rep.feasible) {
          rep.feasible = true;
          rep.witness = fixed;
        }
        if (!opts.count_all) stop = true;
      } else {
        node(depth + 1);
      }
    }
  }
};

}  // namespace

BnbReport bnb_with_order(const FeasibilityInstance& inst, const std::vector<std::size_t>& order,
                         const BnbOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  const std::size_t r = inst.num_vars();
  if (order.size() != r) throw Error(ErrorCode::InvalidPermutation, "order length must equal the variable count");
  std::vector<std::size_t> zero_based(r);
  std::vector<bool> seen(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (order[i] < 1 || order[i] > r || seen[order[i] - 1])
      throw Error(ErrorCode::InvalidPermutation, "order is not a permutation of 1..r");
    seen[order[i] - 1] = true;
    zero_based[i] = order[i] - 1;
  }

  BnbReport rep;
  rep.nodes_per_level.assign(r, 0);
  rep.level_variable = order;
  Search s{inst, zero_based, opts, rep, IntVector(r, Integer(0))};
  s.node(0);
  rep.solved_at_root = std::all_of(rep.nodes_per_level.begin(), rep.nodes_per_level.end(),
                                   [](std::uint64_t c) { return c <= 1; });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

BnbReport reverse_bnb(const FeasibilityInstance& inst, const BnbOptions& opts) {
  std::vector<std::size_t> order(inst.num_vars());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - i;
  return bnb_with_order(inst, order, opts);
}

}  // namespace latbb
