#include "latbb/harness.hpp"

namespace latbb {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::UniformBox: return "uniform-box";
    case Family::MarketshareEq: return "marketshare-eq";
    case Family::MarketshareIneq: return "marketshare-ineq";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (auto f : {Family::UniformBox, Family::MarketshareEq, Family::MarketshareIneq})
    if (s == to_string(f)) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown family: " + s);
}

void GeneratorSpec::validate() const {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "generator needs m, n >= 1");
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "generator needs M >= 1");
  if (family == Family::UniformBox && m > n) throw Error(ErrorCode::InvalidArgument, "independent rows need m <= n");
}

std::mt19937_64 instance_stream(std::uint64_t seed, std::uint64_t id) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(id + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty draw range");
  const std::uint64_t range = hi - lo + 1;
  std::uint64_t x = rng();
  if (range == 0) return x;  // full 64-bit range
  const std::uint64_t threshold = (0 - range) % range;
  while (x < threshold) x = rng();
  return lo + x % range;
}

FeasibilityInstance make_marketshare(const IntMatrix& a, Family family) {
  const std::size_t m = a.rows(), n = a.cols();
  IntVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j);
    mpz_fdiv_q_2exp(b[i].get_mpz_t(), s.get_mpz_t(), 1);
  }
  IntVector lo = b;
  if (family == Family::MarketshareIneq)
    for (auto& v : lo) v -= 1;
  return FeasibilityInstance::stacked(a, lo, b, IntVector(n, Integer(0)), IntVector(n, Integer(1)));
}

GeneratedInstance generate_one(const GeneratorSpec& spec, std::size_t id) {
  spec.validate();
  auto rng = instance_stream(spec.seed, id);
  GeneratedInstance gi;
  gi.id = id;
  for (;;) {
    gi.a = IntMatrix(spec.m, spec.n);
    for (std::size_t i = 0; i < spec.m; ++i)
      for (std::size_t j = 0; j < spec.n; ++j)
        gi.a(i, j) = static_cast<unsigned long>(uniform_draw(rng, 1, spec.M));
    gi.independent_rows = rank(gi.a) == spec.m;
    if (gi.independent_rows || spec.family != Family::UniformBox) break;
    ++gi.rejections;
  }
  gi.instance = make_marketshare(gi.a, spec.family == Family::MarketshareIneq ? Family::MarketshareIneq
                                                                                : Family::MarketshareEq);
  return gi;
}

std::vector<GeneratedInstance> generate(const GeneratorSpec& spec) {
  std::vector<GeneratedInstance> out;
  out.reserve(spec.count);
  for (std::size_t id = 0; id < spec.count; ++id) out.push_back(generate_one(spec, id));
  return out;
}

}  // namespace latbb
