#include "latbb/reformulate.hpp"

namespace latbb {

const char* to_string(ReformulationKind k) noexcept {
  return k == ReformulationKind::Rangespace ? "rangespace" : "nullspace";
}

FeasibilityInstance FeasibilityInstance::stacked(const IntMatrix& a, const IntVector& l1, const IntVector& w1,
                                                 const IntVector& l2, const IntVector& w2) {
  FeasibilityInstance inst;
  inst.constraint = vstack(a, IntMatrix::identity(a.cols()));
  inst.lower = l1;
  inst.lower.insert(inst.lower.end(), l2.begin(), l2.end());
  inst.upper = w1;
  inst.upper.insert(inst.upper.end(), w2.begin(), w2.end());
  inst.shape = StackedShape{a.rows(), a.cols()};
  inst.validate();
  return inst;
}

void FeasibilityInstance::validate() const {
  if (constraint.rows() == 0 || constraint.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "empty constraint matrix");
  if (lower.size() != constraint.rows() || upper.size() != constraint.rows())
    throw Error(ErrorCode::InvalidArgument, "bound vectors must have one entry per constraint row");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw Error(ErrorCode::InvalidArgument, "lower > upper in row " + std::to_string(i + 1));
  if (shape) {
    const auto [m, n] = *shape;
    if (constraint.rows() != m + n || constraint.cols() != n)
      throw Error(ErrorCode::InvalidArgument, "stacked shape does not match constraint matrix");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (constraint(m + i, j) != (i == j ? 1 : 0))
          throw Error(ErrorCode::InvalidArgument, "bottom block of a stacked instance must be the identity");
    for (std::size_t i = 0; i < n; ++i)
      if (!(upper[m + i] > lower[m + i]))
        throw Error(ErrorCode::InvalidArgument, "variable bounds must satisfy w2 > l2");
  } else if (rank(constraint) != constraint.cols()) {
    throw Error(ErrorCode::RankDeficient, "constraint matrix must have full column rank");
  }
}

bool FeasibilityInstance::contains(const IntVector& x) const {
  if (x.size() != num_vars()) return false;
  IntVector bx = constraint * x;
  for (std::size_t i = 0; i < bx.size(); ++i)
    if (bx[i] < lower[i] || bx[i] > upper[i]) return false;
  return true;
}

Integer FeasibilityInstance::bound_gap_norm_sq() const {
  Integer s = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    Integer d = upper[i] - lower[i];
    s += d * d;
  }
  return s;
}

namespace {
const StackedShape& need_shape(const std::optional<StackedShape>& s) {
  if (!s) throw Error(ErrorCode::WrongKind, "instance is not of stacked (A; I) form");
  return *s;
}
}  // namespace

IntMatrix FeasibilityInstance::a() const {
  const auto& s = need_shape(shape);
  IntMatrix a(s.m, s.n);
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.n; ++j) a(i, j) = constraint(i, j);
  return a;
}

IntVector FeasibilityInstance::l1() const {
  const auto& s = need_shape(shape);
  return IntVector(lower.begin(), lower.begin() + s.m);
}
IntVector FeasibilityInstance::w1() const {
  const auto& s = need_shape(shape);
  return IntVector(upper.begin(), upper.begin() + s.m);
}
IntVector FeasibilityInstance::l2() const {
  const auto& s = need_shape(shape);
  return IntVector(lower.begin() + s.m, lower.end());
}
IntVector FeasibilityInstance::w2() const {
  const auto& s = need_shape(shape);
  return IntVector(upper.begin() + s.m, upper.end());
}

IntVector Reformulation::to_original(const IntVector& y) const {
  if (kind == ReformulationKind::Rangespace) return U * y;
  IntVector x = kernel * y;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += x0[i];
  return x;
}

std::optional<IntVector> Reformulation::from_original(const IntVector& x) const {
  if (kind == ReformulationKind::Rangespace) return inverse_unimodular(U) * x;
  // kernel has full column rank; solve kernel * y = x - x0 through the normal equations.
  RatMatrix k = to_rational(kernel);
  RatMatrix kt = k.transpose();
  RatMatrix pinv = inverse(kt * k) * kt;
  IntVector y(kernel.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) v += pinv(i, j) * (x[j] - x0[j]);
    if (v.get_den() != 1) return std::nullopt;
    y[i] = v.get_num();
  }
  if (to_original(y) != x) return std::nullopt;
  return y;
}

Reformulation rangespace(const FeasibilityInstance& inst, ReductionKind reduction, const ReductionParams& params) {
  inst.validate();
  ReductionResult red = reduce(LatticeBasis(inst.constraint), reduction, params);
  FeasibilityInstance out{red.basis.basis(), inst.lower, inst.upper, std::nullopt};
  return Reformulation{ReformulationKind::Rangespace, std::move(out), inst, std::move(red.U), {}, {},
                       reduction, params};
}

Reformulation nullspace(const FeasibilityInstance& inst, ReductionKind reduction, const ReductionParams& params) {
  inst.validate();
  const auto& shape = need_shape(inst.shape);
  if (inst.l1() != inst.w1())
    throw Error(ErrorCode::WrongKind, "nullspace reformulation needs equality rows (w1 = l1)");
  if (shape.m >= shape.n) throw Error(ErrorCode::InvalidArgument, "nullspace reformulation needs m < n");
  const IntMatrix a = inst.a();
  IntMatrix kernel = kernel_basis(a);  // throws RankDeficient
  IntVector x0 = solve_integral(a, inst.l1());  // throws NoIntegralSolution
  ReductionResult red = reduce(LatticeBasis(kernel), reduction, params);
  const IntMatrix& b = red.basis.basis();

  // Nearest-plane reduction of x0 modulo the kernel lattice.
  const GsoData& g = red.basis.gso();
  for (std::size_t j = b.cols(); j-- > 0;) {
    Rational proj = 0;
    for (std::size_t i = 0; i < x0.size(); ++i) proj += g.bstar(i, j) * x0[i];
    Integer c = round_q(proj / g.bstar_norms_sq[j]);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] -= c * b(i, j);
  }

  IntVector l2 = inst.l2(), w2 = inst.w2();
  for (std::size_t i = 0; i < l2.size(); ++i) {
    l2[i] -= x0[i];
    w2[i] -= x0[i];
  }
  FeasibilityInstance out{b, std::move(l2), std::move(w2), std::nullopt};
  return Reformulation{ReformulationKind::Nullspace, std::move(out), inst, {}, b, std::move(x0), reduction, params};
}

IntVector branching_direction(const Reformulation& ref, std::size_t index) {
  if (ref.kind != ReformulationKind::Rangespace)
    throw Error(ErrorCode::WrongKind, "branching directions are defined for rangespace reformulations");
  if (index < 1 || index > ref.U.rows()) throw Error(ErrorCode::InvalidArgument, "index out of range");
  return inverse_unimodular(ref.U).row(index - 1);
}

}  // namespace latbb
