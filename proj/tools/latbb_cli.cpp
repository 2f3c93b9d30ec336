// latbb: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latbb/json_io.hpp"

using namespace latbb;

namespace {

json load_json(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + arg);
  return json::parse(in);
}

json bounds_query(const json& q) {
  const std::string op = q.value("op", "threshold");
  if (op == "count_ball_points") {
    const std::size_t n = q.at("n").get<std::size_t>();
    const Integer k = integer_from_json(q.at("k"));
    return {{"query", q}, {"N", to_json(count_ball_points(n, k))}};
  }
  if (op == "hermite") {
    const std::size_t i = q.at("i").get<std::size_t>();
    const auto method = q.value("method", "blichfeldt") == "linear" ? HermiteMethod::Linear : HermiteMethod::Blichfeldt;
    return {{"query", q},
            {"C_bound", to_json(hermite_constant_bound(i, method).value)},
            {"gamma", to_json(hermite_gamma(i, method))}};
  }
  if (op == "fraction") {
    const auto which = q.value("which", "N") == "R" ? FractionKind::Rangespace : FractionKind::Nullspace;
    const Rational v = fraction_bound(q.at("n").get<std::size_t>(), q.at("m").get<std::size_t>(),
                                      integer_from_json(q.at("M")), integer_from_json(q.at("k")), which);
    return {{"query", q}, {"bound", to_json(v)}, {"approx", v.get_d()}};
  }
  if (op != "threshold") throw Error(ErrorCode::InvalidArgument, "unknown bounds op: " + op);
  const ThresholdQuery tq = threshold_query_from_json(q);
  const ThresholdResult r = m_threshold(tq);
  json out{{"query", q}, {"M", to_json(r.M)}};
  if (tq.variant == ThresholdVariant::TableActual) {
    out["gamma"] = to_json(r.gamma);
    out["k"] = to_json(r.k);
    out["radius_sq"] = to_json(r.radius_sq);
    out["N"] = to_json(r.ball_points);
  }
  return out;
}

std::vector<std::pair<GeneratorSpec, Pipeline>> experiment_runs(const json& spec) {
  std::vector<std::pair<GeneratorSpec, Pipeline>> runs;
  const json list = spec.contains("runs") ? spec.at("runs") : json::array({spec});
  for (const auto& run : list) {
    json gen = run.at("generator");
    const Pipeline pipe = pipeline_from_json(run.value("pipeline", json::object()));
    const json ms = gen.at("M").is_array() ? gen.at("M") : json::array({gen.at("M")});
    for (const auto& m : ms) {
      gen["M"] = m;
      runs.emplace_back(generator_spec_from_json(gen), pipe);
    }
  }
  return runs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice reformulations and branch-and-bound for bounded integer feasibility"};
  app.require_subcommand(1);

  std::string instance_path, kind = "range", reduction = "lll", order = "reverse", delta = "3/4";
  auto* reform = app.add_subcommand("reformulate", "Rangespace or nullspace reformulation of an instance");
  reform->add_option("instance", instance_path, "instance JSON file")->required();
  reform->add_option("--kind", kind, "range|null")->check(CLI::IsMember({"range", "null"}));
  reform->add_option("--reduction", reduction, "lll|kz|rkz")->check(CLI::IsMember({"lll", "kz", "rkz"}));
  reform->add_option("--delta", delta, "LLL parameter p/q");

  bool count_all = false;
  auto* solve = app.add_subcommand("solve", "Branch-and-bound on an instance");
  solve->add_option("instance", instance_path, "instance JSON file")->required();
  solve->add_option("--order", order, "reverse|given")->check(CLI::IsMember({"reverse", "given"}));
  solve->add_flag("--count-all", count_all, "enumerate every integer point");

  std::string query;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound query");
  bounds->add_option("--query", query, "JSON text or file")->required();

  bool table = false;
  std::string chi = "root-m", radius = "exact";
  auto* thresholds = app.add_subcommand("thresholds", "M thresholds");
  thresholds->add_flag("--table1", table, "the five binary-box rows at eps = 0.1 and 0.01");
  thresholds->add_option("--chi", chi, "root-m|full")->check(CLI::IsMember({"root-m", "full"}));
  thresholds->add_option("--radius", radius, "exact|ceil")->check(CLI::IsMember({"exact", "ceil"}));

  std::string spec, out_dir = "experiment_out";
  int threads = 0;
  auto* experiment = app.add_subcommand("experiment", "Run a generated experiment and write reports");
  experiment->add_option("--spec", spec, "JSON text or file")->required();
  experiment->add_option("--out", out_dir, "output directory");
  experiment->add_option("--threads", threads, "worker threads (default: LATBB_THREADS or all cores)");

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("--spec", spec, "JSON text or file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reform) {
      ReductionParams params;
      params.delta = rational_from_json(json(delta));
      const FeasibilityInstance inst = instance_from_json(load_json(instance_path));
      const ReductionKind rk = parse_reduction_kind(reduction);
      const Reformulation ref = kind == "range" ? rangespace(inst, rk, params) : nullspace(inst, rk, params);
      json out = to_json(ref);
      out["width_upper_bound"] = to_json(width_upper_bound(ref));
      std::cout << out.dump(2) << '\n';
    } else if (*solve) {
      const FeasibilityInstance inst = instance_from_json(load_json(instance_path));
      BnbOptions opts;
      opts.count_all = count_all;
      BnbReport rep;
      if (order == "reverse") {
        rep = reverse_bnb(inst, opts);
      } else {
        std::vector<std::size_t> ord(inst.num_vars());
        for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i + 1;
        rep = bnb_with_order(inst, ord, opts);
      }
      std::cout << to_json(rep).dump(2) << '\n';
    } else if (*bounds) {
      std::cout << bounds_query(load_json(query)).dump(2) << '\n';
    } else if (*thresholds) {
      if (!table) throw Error(ErrorCode::InvalidArgument, "thresholds needs --table1");
      const auto rows = table1(chi == "full" ? ChiExponent::Full : ChiExponent::RootM,
                               radius == "ceil" ? RadiusMode::CeilInteger : RadiusMode::Exact);
      std::cout << "n\tm\tM(eps=0.1)\tM(eps=0.01)\n";
      for (const auto& r : rows) std::cout << r.n << '\t' << r.m << '\t' << r.m_eps_01 << '\t' << r.m_eps_001 << '\n';
    } else if (*experiment) {
      std::vector<ExperimentRecord> all;
      for (const auto& [g, p] : experiment_runs(load_json(spec))) {
        ExperimentResult res = run_experiment(g, p, threads);
        std::cerr << to_string(g.family) << " M=" << g.M << " " << to_string(p.formulation) << "/"
                  << to_string(p.reduction) << ": mean nodes " << res.summary.mean_nodes.get_d() << ", solved at root "
                  << res.summary.solved_at_root << "/" << res.summary.records << '\n';
        all.insert(all.end(), res.records.begin(), res.records.end());
      }
      const ReportFiles files = write_report(all, out_dir);
      std::cout << table2_markdown(all) << "wrote " << files.csv.string() << ", " << files.json.string() << ", "
                << files.markdown.string() << '\n';
    } else if (*gen) {
      json out = json::array();
      for (const auto& gi : generate(generator_spec_from_json(load_json(spec))))
        out.push_back({{"id", gi.id},
                       {"independent_rows", gi.independent_rows},
                       {"rejections", gi.rejections},
                       {"instance", to_json(gi.instance)}});
      std::cout << out.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
