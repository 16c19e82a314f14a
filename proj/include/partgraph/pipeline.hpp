#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partgraph/atlas.hpp"
#include "partgraph/export.hpp"
#include "partgraph/framework.hpp"
#include "partgraph/thickness.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/zones.hpp"

namespace partgraph {

inline constexpr int kVerifiedRangeMax = 30;

struct RunConfig {
  int n_min = 1;
  int n_max = kVerifiedRangeMax;
  std::filesystem::path output_dir = "out";
  unsigned jobs = 1;  // 0 = hardware concurrency
  bool allow_beyond_verified_range = false;
  bool compute_missing = true;  // tables: compute profiles not found on disk

  /// Throws std::invalid_argument on an unusable range.
  void validate() const {
    if (n_min < 1 || n_max < n_min)
      throw std::invalid_argument("invalid range: need 1 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                                  std::to_string(n_max));
    if (n_max > kVerifiedRangeMax && !allow_beyond_verified_range)
      throw std::invalid_argument("n_max = " + std::to_string(n_max) +
                                  " exceeds the verified range 1..30; pass --allow-beyond-verified-range");
  }
};

/// Everything computed for one n.
struct NResult {
  TransferGraph graph;
  FrameworkSet framework;
  AxisSet axis;
  ThicknessProfile profile;
  std::vector<ZoneDecomposition> zones;  // r = 1..tau_max
};

inline NResult compute_n(int n, unsigned jobs = 1) {
  auto graph = build_graph(n);
  auto framework = boundary_framework(graph);
  auto axis = self_conjugate_axis(n);
  auto profile = thickness_profile(graph, jobs);
  std::vector<ZoneDecomposition> zones;
  for (int r = 1; r <= profile.tau_max; ++r) zones.push_back(decompose(graph, framework, profile, r));
  return {std::move(graph), std::move(framework), std::move(axis), std::move(profile), std::move(zones)};
}

inline std::string n_dirname(int n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "n%02d", n);
  return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

/// Writes <out>/nNN/{profile.csv, profile.json, framework.json,
/// zones_rR.json, locus_stats.json}.
inline void write_n_artifacts(const NResult& res, const std::filesystem::path& out) {
  const auto dir = out / n_dirname(res.graph.n());
  write_file(dir / "profile.csv", profile_csv(res.graph, res.profile));
  write_file(dir / "profile.json", profile_json(res.graph, res.profile));
  write_file(dir / "framework.json", framework_json(res.graph, res.framework, res.axis));
  for (const auto& z : res.zones) write_file(dir / ("zones_r" + std::to_string(z.r) + ".json"), zone_json(res.graph, z));
  write_file(dir / "locus_stats.json",
             locus_stats_json(locus_statistics(res.graph, res.framework, res.profile.max_locus)));
}

/// compute: every n in range, artifacts written, summary rows returned.
inline std::vector<NSummary> run_compute(const RunConfig& cfg) {
  cfg.validate();
  std::vector<NSummary> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto res = compute_n(n, cfg.jobs);
    write_n_artifacts(res, cfg.output_dir);
    rows.push_back(summarize(res.graph, res.profile));
  }
  return rows;
}

/// tables: needs 1..n_max. Profiles are read from disk when present.
inline Tables run_tables(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.n_min != 1) throw std::domain_error("tables need the complete range starting at n = 1");
  std::vector<NSummary> rows;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const auto stored = read_file(cfg.output_dir / n_dirname(n) / "profile.csv");
    if (stored) {
      const auto prof = parse_profile_csv(n, *stored);
      NSummary row{n, prof.tau.size(), prof.tau_max, {}};
      const auto vertices = enumerate_partitions(n);
      for (VertexId v : prof.max_locus) row.max_locus.push_back(vertices[v]);
      rows.push_back(std::move(row));
    } else if (cfg.compute_missing) {
      const auto g = build_graph(n);
      rows.push_back(summarize(g, thickness_profile(g, cfg.jobs)));
    } else {
      throw std::runtime_error("missing artifact " + (cfg.output_dir / n_dirname(n) / "profile.csv").string());
    }
  }
  auto t = export_tables(rows, cfg.n_max > kVerifiedRangeMax);
  const auto dir = cfg.output_dir / "tables";
  write_file(dir / "first_occurrences.csv", t.first_occurrences_csv);
  write_file(dir / "summary.csv", t.summary_csv);
  write_file(dir / "max_locus.json", t.max_locus_json);
  return t;
}

inline std::string atlas_filename(int n, AtlasMode mode) {
  return "atlas_n" + std::to_string(n) + "_" + std::string(to_string(mode)) + ".svg";
}

/// atlas: renders G_n with M_n outlined into <out>/atlas_n{n}_{mode}.svg.
inline std::filesystem::path run_atlas(const RunConfig& cfg, int n, AtlasMode mode) {
  cfg.validate();
  if (n < cfg.n_min || n > cfg.n_max)
    throw std::invalid_argument("atlas n = " + std::to_string(n) + " is outside the configured range");
  const auto g = build_graph(n);
  const auto fw = boundary_framework(g);
  const auto prof = thickness_profile(g, cfg.jobs);
  const auto path = cfg.output_dir / atlas_filename(n, mode);
  write_file(path, render_atlas(g, fw, prof, mode, prof.max_locus));
  return path;
}

}  // namespace partgraph
