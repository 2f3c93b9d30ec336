#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "latbb/harness.hpp"

namespace latbb {
namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LATBB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

}  // namespace

const char* to_string(Formulation f) noexcept {
  switch (f) {
    case Formulation::Original: return "original";
    case Formulation::Rangespace: return "range";
    case Formulation::Nullspace: return "null";
  }
  return "?";
}

Formulation parse_formulation(const std::string& s) {
  for (auto f : {Formulation::Original, Formulation::Rangespace, Formulation::Nullspace})
    if (s == to_string(f)) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown formulation: " + s);
}

std::vector<Integer> level_node_bounds(const FeasibilityInstance& inst, const std::vector<std::size_t>& order) {
  const std::size_t r = inst.num_vars();
  IntMatrix b(inst.num_rows(), r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < inst.num_rows(); ++i) b(i, j) = inst.constraint(i, order[r - 1 - j] - 1);
  const GsoData g = gram_schmidt(b);
  const Rational s(inst.bound_gap_norm_sq());
  std::vector<Integer> out(r);
  for (std::size_t t = 0; t < r; ++t) out[t] = node_count_bound(g, s, r - t);
  return out;
}

ExperimentRecord run_instance(const GeneratedInstance& gi, const GeneratorSpec& spec, const Pipeline& pipeline) {
  ExperimentRecord rec;
  rec.id = gi.id;
  rec.family = spec.family;
  rec.m = spec.m;
  rec.n = spec.n;
  rec.M = spec.M;
  rec.seed = spec.seed;
  rec.formulation = pipeline.formulation;
  rec.reduction = pipeline.reduction;
  try {
    auto t0 = std::chrono::steady_clock::now();
    std::optional<Reformulation> ref;
    if (pipeline.formulation == Formulation::Rangespace)
      ref = rangespace(gi.instance, pipeline.reduction, pipeline.params);
    else if (pipeline.formulation == Formulation::Nullspace)
      ref = nullspace(gi.instance, pipeline.reduction, pipeline.params);
    const FeasibilityInstance& solved = ref ? ref->instance : gi.instance;
    rec.reduce_seconds = since(t0);

    const std::size_t r = solved.num_vars();
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = pipeline.order == BranchOrder::Reverse ? r - i : i + 1;
    t0 = std::chrono::steady_clock::now();
    rec.bnb = bnb_with_order(solved, order, pipeline.bnb);
    rec.solve_seconds = since(t0);

    rec.level_bounds = level_node_bounds(solved, order);
    for (std::size_t t = 0; t < r; ++t)
      if (Integer(static_cast<unsigned long>(rec.bnb.nodes_per_level[t])) > rec.level_bounds[t])
        rec.level_bounds_ok = false;

    if (ref) {
      IntVector e(r, Integer(0));
      e[r - 1] = 1;
      const Width w = width(e, solved);
      if (w.feasible) rec.width_last = w.value;
      rec.width_bound = width_upper_bound(*ref);
      rec.width_bound_ok = !rec.width_last || *rec.width_last <= *rec.width_bound;
    }
  } catch (const std::exception& ex) {
    rec.error = ex.what();
  }
  return rec;
}

ExperimentSummary summarize(const std::vector<ExperimentRecord>& records) {
  ExperimentSummary s;
  s.records = records.size();
  std::vector<std::uint64_t> nodes;
  for (const auto& r : records) {
    if (!r.error.empty()) {
      ++s.errors;
      continue;
    }
    (r.bnb.feasible ? s.feasible : s.infeasible) += 1;
    if (r.bnb.solved_at_root) ++s.solved_at_root;
    nodes.push_back(r.bnb.total_nodes);
  }
  if (!nodes.empty()) {
    Integer total = 0;
    for (auto v : nodes) total += static_cast<unsigned long>(v);
    s.mean_nodes = Rational(total, static_cast<unsigned long>(nodes.size()));
    s.mean_nodes.canonicalize();
    std::sort(nodes.begin(), nodes.end());
    const std::size_t h = nodes.size() / 2;
    s.median_nodes = nodes.size() % 2 ? Rational(static_cast<unsigned long>(nodes[h]))
                                      : Rational(Integer(static_cast<unsigned long>(nodes[h - 1])) +
                                                     static_cast<unsigned long>(nodes[h]),
                                                 2);
    s.median_nodes.canonicalize();
  }
  return s;
}

ExperimentResult run_experiment(const GeneratorSpec& spec, const Pipeline& pipeline, int threads) {
  spec.validate();
  ExperimentResult res;
  res.records.resize(spec.count);
  const long count = static_cast<long>(spec.count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (long id = 0; id < count; ++id) {
    const GeneratedInstance gi = generate_one(spec, static_cast<std::size_t>(id));
    res.records[id] = run_instance(gi, spec, pipeline);
  }
  res.summary = summarize(res.records);
  return res;
}

ExperimentResult run_experiment_serial(const GeneratorSpec& spec, const Pipeline& pipeline) {
  spec.validate();
  ExperimentResult res;
  for (std::size_t id = 0; id < spec.count; ++id) res.records.push_back(run_instance(generate_one(spec, id), spec, pipeline));
  res.summary = summarize(res.records);
  return res;
}

}  // namespace latbb
