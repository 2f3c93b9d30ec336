#include <omp.h>

#include "latbb/bounds.hpp"

namespace latbb {
namespace {

// cnt[s] = number of vectors with squared norm exactly s; add one coordinate.
template <bool Parallel>
Integer count_dp(std::size_t n, std::size_t budget) {
  std::vector<Integer> cnt(budget + 1, Integer(0)), next(budget + 1);
  cnt[0] = 1;
  for (std::size_t d = 0; d < n; ++d) {
    const long hi = static_cast<long>(budget);
#pragma omp parallel for schedule(dynamic, 16) if (Parallel)
    for (long s = 0; s <= hi; ++s) {
      Integer acc = cnt[s];
      for (long t = 1; t * t <= s; ++t) acc += 2 * cnt[s - t * t];
      next[s] = acc;
    }
    cnt.swap(next);
  }
  Integer total = 0;
  for (const auto& c : cnt) total += c;
  return total;
}

}  // namespace

Integer count_ball_points_sq(std::size_t n, std::size_t budget) { return count_dp<true>(n, budget); }

Integer count_ball_points_sq_serial(std::size_t n, std::size_t budget) { return count_dp<false>(n, budget); }

Integer count_ball_points(std::size_t n, const Integer& k) {
  if (n < 1 || sgn(k) < 0) throw Error(ErrorCode::InvalidArgument, "count_ball_points needs n >= 1, k >= 0");
  Integer k2 = k * k;
  if (!k2.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "radius too large");
  return count_ball_points_sq(n, k2.get_ui());
}

}  // namespace latbb
