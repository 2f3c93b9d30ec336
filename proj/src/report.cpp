#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "latbb/json_io.hpp"

namespace latbb {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<Rational>& q) { return q ? q->get_str() : ""; }

std::string fixed2(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", q.get_d());
  return buf;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + p.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + p.string());
}

bool inequality(const ExperimentRecord& r) {
  return r.family == Family::MarketshareIneq;
}

}  // namespace

std::string records_csv(const std::vector<ExperimentRecord>& records, bool with_timing) {
  std::ostringstream out;
  out << "id,family,m,n,M,seed,formulation,reduction,feasible,solved_at_root,total_nodes,nodes_per_level,"
         "level_bounds_ok,width_last,width_bound,width_bound_ok,error";
  if (with_timing) out << ",reduce_seconds,solve_seconds";
  out << '\n';
  for (const auto& r : records) {
    std::string levels;
    for (std::size_t i = 0; i < r.bnb.nodes_per_level.size(); ++i)
      levels += (i ? ";" : "") + std::to_string(r.bnb.nodes_per_level[i]);
    out << r.id << ',' << to_string(r.family) << ',' << r.m << ',' << r.n << ',' << r.M << ',' << r.seed << ','
        << to_string(r.formulation) << ',' << to_string(r.reduction) << ',' << r.bnb.feasible << ','
        << r.bnb.solved_at_root << ',' << r.bnb.total_nodes << ',' << levels << ',' << r.level_bounds_ok << ','
        << opt_str(r.width_last) << ',' << opt_str(r.width_bound) << ',' << r.width_bound_ok << ','
        << csv_field(r.error);
    if (with_timing) out << ',' << r.reduce_seconds << ',' << r.solve_seconds;
    out << '\n';
  }
  return out.str();
}

std::string table2_markdown(const std::vector<ExperimentRecord>& records) {
  std::map<std::uint64_t, std::pair<std::vector<ExperimentRecord>, std::vector<ExperimentRecord>>> by_m;
  for (const auto& r : records) (inequality(r) ? by_m[r.M].second : by_m[r.M].first).push_back(r);
  std::ostringstream out;
  out << "| M | equality (mean nodes) | inequality (mean nodes) |\n|---:|---:|---:|\n";
  for (const auto& [m, cols] : by_m) {
    auto cell = [](const std::vector<ExperimentRecord>& rs) {
      if (rs.empty()) return std::string("-");
      const ExperimentSummary s = summarize(rs);
      if (s.errors == s.records) return std::string("error");
      return fixed2(s.mean_nodes);
    };
    out << "| " << m << " | " << cell(cols.first) << " | " << cell(cols.second) << " |\n";
  }
  return out.str();
}

ReportFiles write_report(const std::vector<ExperimentRecord>& records, const std::filesystem::path& dir,
                         const std::string& stem) {
  if (records.empty()) throw Error(ErrorCode::InvalidArgument, "report needs at least one record");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  json groups = json::array();
  std::map<std::tuple<std::uint64_t, std::string, std::string>, std::vector<ExperimentRecord>> grouped;
  for (const auto& r : records) grouped[{r.M, to_string(r.family), to_string(r.formulation)}].push_back(r);
  for (const auto& [key, rs] : grouped) {
    json g = to_json(summarize(rs));
    g["M"] = std::get<0>(key);
    g["family"] = std::get<1>(key);
    g["formulation"] = std::get<2>(key);
    groups.push_back(g);
  }
  json summary{{"summary", to_json(summarize(records))}, {"groups", groups}};

  ReportFiles files{dir / (stem + ".csv"), dir / (stem + ".json"), dir / (stem + ".md")};
  write_file(files.csv, records_csv(records));
  write_file(files.json, summary.dump(2) + "\n");
  write_file(files.markdown, table2_markdown(records));
  return files;
}

}  // namespace latbb
