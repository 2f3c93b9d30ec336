#include "latbb/json_io.hpp"

namespace latbb {

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const Rational& v) {
  if (v.get_den() == 1) return to_json(v.get_num());
  return v.get_str();
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad integer string");
    return v;
  }
  throw Error(ErrorCode::InvalidArgument, "expected an integer");
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    Rational v;
    if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0)
      throw Error(ErrorCode::InvalidArgument, "bad rational string");
    v.canonicalize();
    return v;
  }
  throw Error(ErrorCode::InvalidArgument, "expected a rational (integer or \"p/q\")");
}

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidArgument, "expected a nonempty matrix");
  const std::size_t cols = j[0].size();
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector row = int_vector_from_json(j[i]);
    if (row.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

FeasibilityInstance instance_from_json(const json& j) {
  try {
    if (j.contains("A"))
      return FeasibilityInstance::stacked(int_matrix_from_json(j.at("A")), int_vector_from_json(j.at("l1")),
                                          int_vector_from_json(j.at("w1")), int_vector_from_json(j.at("l2")),
                                          int_vector_from_json(j.at("w2")));
    FeasibilityInstance inst{int_matrix_from_json(j.at("constraint")), int_vector_from_json(j.at("lower")),
                             int_vector_from_json(j.at("upper")), std::nullopt};
    inst.validate();
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("instance JSON: ") + e.what());
  }
}

json to_json(const FeasibilityInstance& inst) {
  if (inst.shape)
    return {{"A", to_json(inst.a())}, {"l1", to_json(inst.l1())}, {"w1", to_json(inst.w1())},
            {"l2", to_json(inst.l2())}, {"w2", to_json(inst.w2())}};
  return {{"constraint", to_json(inst.constraint)}, {"lower", to_json(inst.lower)}, {"upper", to_json(inst.upper)}};
}

json to_json(const Reformulation& ref) {
  json j{{"kind", to_string(ref.kind)},
         {"reduction", to_string(ref.reduction_used)},
         {"delta", to_json(ref.params.delta)},
         {"instance", to_json(ref.instance)}};
  if (ref.kind == ReformulationKind::Rangespace) {
    j["U"] = to_json(ref.U);
  } else {
    j["kernel"] = to_json(ref.kernel);
    j["x0"] = to_json(ref.x0);
  }
  return j;
}

json to_json(const BnbReport& rep) {
  json j{{"feasible", rep.feasible},
         {"nodes_per_level", rep.nodes_per_level},
         {"level_variable", rep.level_variable},
         {"total_nodes", rep.total_nodes},
         {"solved_at_root", rep.solved_at_root},
         {"solutions", rep.solutions},
         {"lp_solves", rep.lp_solves},
         {"aborted", rep.aborted},
         {"seconds", rep.seconds}};
  if (rep.feasible) j["witness"] = to_json(rep.witness);
  return j;
}

json to_json(const ExperimentRecord& rec) {
  json j{{"id", rec.id},
         {"family", to_string(rec.family)},
         {"m", rec.m},
         {"n", rec.n},
         {"M", rec.M},
         {"seed", rec.seed},
         {"formulation", to_string(rec.formulation)},
         {"reduction", to_string(rec.reduction)},
         {"bnb", to_json(rec.bnb)},
         {"level_bounds", to_json(rec.level_bounds)},
         {"level_bounds_ok", rec.level_bounds_ok},
         {"width_bound_ok", rec.width_bound_ok},
         {"reduce_seconds", rec.reduce_seconds},
         {"solve_seconds", rec.solve_seconds}};
  if (rec.width_last) j["width_last"] = to_json(*rec.width_last);
  if (rec.width_bound) j["width_bound"] = to_json(*rec.width_bound);
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

json to_json(const ExperimentSummary& s) {
  return {{"records", s.records},
          {"feasible", s.feasible},
          {"infeasible", s.infeasible},
          {"errors", s.errors},
          {"solved_at_root", s.solved_at_root},
          {"mean_nodes", s.mean_nodes.get_d()},
          {"mean_nodes_exact", s.mean_nodes.get_str()},
          {"median_nodes", s.median_nodes.get_d()}};
}

ThresholdQuery threshold_query_from_json(const json& j) {
  ThresholdQuery q;
  q.n = j.at("n").get<std::size_t>();
  q.m = j.at("m").get<std::size_t>();
  q.norm_sq_bound = j.contains("norm_sq_bound") ? integer_from_json(j["norm_sq_bound"])
                                                : Integer(static_cast<unsigned long>(q.n));
  q.epsilon = rational_from_json(j.value("epsilon", json("1/10")));
  q.variant = parse_threshold_variant(j.value("variant", "table"));
  const std::string chi = j.value("chi", "root-m");
  if (chi != "root-m" && chi != "full") throw Error(ErrorCode::InvalidArgument, "chi must be root-m or full");
  q.chi = chi == "full" ? ChiExponent::Full : ChiExponent::RootM;
  const std::string radius = j.value("radius", "exact");
  if (radius != "exact" && radius != "ceil") throw Error(ErrorCode::InvalidArgument, "radius must be exact or ceil");
  q.radius = radius == "ceil" ? RadiusMode::CeilInteger : RadiusMode::Exact;
  const std::string h = j.value("hermite", "blichfeldt");
  if (h != "blichfeldt" && h != "linear") throw Error(ErrorCode::InvalidArgument, "hermite must be blichfeldt or linear");
  q.hermite = h == "linear" ? HermiteMethod::Linear : HermiteMethod::Blichfeldt;
  q.validate();
  return q;
}

GeneratorSpec generator_spec_from_json(const json& j) {
  GeneratorSpec s;
  s.family = parse_family(j.value("family", "marketshare-eq"));
  s.m = j.at("m").get<std::size_t>();
  s.n = j.at("n").get<std::size_t>();
  s.M = j.at("M").get<std::uint64_t>();
  s.count = j.value("count", std::size_t{1});
  s.seed = j.value("seed", std::uint64_t{1});
  s.validate();
  return s;
}

Pipeline pipeline_from_json(const json& j) {
  Pipeline p;
  p.formulation = parse_formulation(j.value("formulation", "null"));
  p.reduction = parse_reduction_kind(j.value("reduction", "kz"));
  const std::string order = j.value("order", "reverse");
  if (order != "reverse" && order != "given") throw Error(ErrorCode::InvalidArgument, "order must be reverse or given");
  p.order = order == "given" ? BranchOrder::Given : BranchOrder::Reverse;
  p.bnb.count_all = j.value("count_all", false);
  p.bnb.node_limit = j.value("node_limit", std::uint64_t{0});
  return p;
}

}  // namespace latbb
