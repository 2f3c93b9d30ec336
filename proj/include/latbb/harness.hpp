#pragma once

// Instance generation, experiment orchestration and reporting.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latbb/bounds.hpp"
#include "latbb/reformulate.hpp"
#include "latbb/solve.hpp"

namespace latbb {

enum class Family { UniformBox, MarketshareEq, MarketshareIneq };
const char* to_string(Family f) noexcept;
Family parse_family(const std::string& s);

struct GeneratorSpec {
  Family family = Family::MarketshareEq;
  std::size_t m = 1;
  std::size_t n = 2;
  std::uint64_t M = 100;
  std::size_t count = 1;
  std::uint64_t seed = 1;

  void validate() const;
};

struct GeneratedInstance {
  std::size_t id = 0;
  IntMatrix a;
  FeasibilityInstance instance;
  bool independent_rows = true;
  std::size_t rejections = 0;  // rank-deficient draws discarded (UniformBox)
};

/// 64-bit stream for instance `id`, independent of every other id.
std::mt19937_64 instance_stream(std::uint64_t seed, std::uint64_t id);
/// Uniform integer in [lo, hi] by rejection sampling.
std::uint64_t uniform_draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// x in {0,1}^n with b = floor(Ae/2): equality A x = b, or b - e <= A x <= b.
FeasibilityInstance make_marketshare(const IntMatrix& a, Family family);

std::vector<GeneratedInstance> generate(const GeneratorSpec& spec);
GeneratedInstance generate_one(const GeneratorSpec& spec, std::size_t id);

enum class Formulation { Original, Rangespace, Nullspace };
enum class BranchOrder { Reverse, Given };
const char* to_string(Formulation f) noexcept;
Formulation parse_formulation(const std::string& s);

struct Pipeline {
  Formulation formulation = Formulation::Nullspace;
  ReductionKind reduction = ReductionKind::KZ;
  BranchOrder order = BranchOrder::Reverse;
  BnbOptions bnb;
  ReductionParams params;
};

struct ExperimentRecord {
  std::size_t id = 0;
  Family family = Family::MarketshareEq;
  std::size_t m = 0, n = 0;
  std::uint64_t M = 0, seed = 0;
  Formulation formulation = Formulation::Original;
  ReductionKind reduction = ReductionKind::KZ;
  BnbReport bnb;
  std::vector<Integer> level_bounds;  // node_count_bound per branching depth
  bool level_bounds_ok = true;
  std::optional<Rational> width_last;   // width(e_r) of the solved system
  std::optional<Rational> width_bound;  // width_upper_bound (reformulations)
  bool width_bound_ok = true;
  double reduce_seconds = 0.0;
  double solve_seconds = 0.0;
  std::string error;  // nonempty when the pipeline threw
};

struct ExperimentSummary {
  std::size_t records = 0, feasible = 0, infeasible = 0, errors = 0, solved_at_root = 0;
  Rational mean_nodes;
  Rational median_nodes;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  ExperimentSummary summary;
};

/// Runs one instance through the pipeline; exceptions land in record.error.
ExperimentRecord run_instance(const GeneratedInstance& gi, const GeneratorSpec& spec, const Pipeline& pipeline);

/// Thread count: `threads` if positive, else LATBB_THREADS, else the OpenMP default.
ExperimentResult run_experiment(const GeneratorSpec& spec, const Pipeline& pipeline, int threads = 0);
ExperimentResult run_experiment_serial(const GeneratorSpec& spec, const Pipeline& pipeline);
ExperimentSummary summarize(const std::vector<ExperimentRecord>& records);

/// Node-count bounds of reverse-order levels for an arbitrary branching order.
std::vector<Integer> level_node_bounds(const FeasibilityInstance& inst, const std::vector<std::size_t>& order);

std::string records_csv(const std::vector<ExperimentRecord>& records, bool with_timing = true);
std::string table2_markdown(const std::vector<ExperimentRecord>& records);

struct ReportFiles {
  std::filesystem::path csv, json, markdown;
};

/// Writes <stem>.csv, <stem>.json and <stem>.md into dir.
ReportFiles write_report(const std::vector<ExperimentRecord>& records, const std::filesystem::path& dir,
                         const std::string& stem = "records");

}  // namespace latbb
