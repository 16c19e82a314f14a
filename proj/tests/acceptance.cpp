// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "partgraph/oracles.hpp"
#include "partgraph/pipeline.hpp"
#include "partgraph/verify.hpp"

namespace fs = std::filesystem;
namespace v = partgraph::verify;
using partgraph::NResult;
using partgraph::VertexSet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail = what;
    }
  }
  void require(const v::Outcome& o) {
    if (o) require(false, *o);
  }
};

std::vector<NResult> compute_range(int n_max, unsigned jobs) {
  std::vector<NResult> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(partgraph::compute_n(n, jobs));
  return out;
}

Criterion first_occurrence_reproduction(const std::vector<NResult>& all, double serial_s, double parallel_s) {
  Criterion c;
  std::vector<int> maxima;
  for (const auto& r : all) maxima.push_back(r.profile.tau_max);
  const auto table = partgraph::first_occurrences(std::span<const int>(maxima));
  const std::map<int, int> expected{{2, 4}, {3, 7}, {4, 11}, {5, 16}, {6, 22}, {7, 29}};
  c.require(table.entries == expected, "first-occurrence values differ");
  c.require(serial_s < 600.0, "single-threaded run exceeded 10 minutes");
  c.require(parallel_s < 120.0, "8-worker run exceeded 2 minutes");
  c.detail += " (1..30 single-threaded " + std::to_string(serial_s) + " s, 8 workers " +
              std::to_string(parallel_s) + " s)";
  return c;
}

Criterion maximal_locus_reproduction(const std::vector<NResult>& all) {
  Criterion c;
  struct Row {
    int n, tau_max;
    std::size_t size;
    std::vector<std::string> reps;
  };
  const std::vector<Row> rows{{7, 3, 4, {"4,2,1", "3,3,1"}},
                              {11, 4, 5, {"5,3,2,1", "4,4,2,1"}},
                              {16, 5, 6, {"6,4,3,2,1", "5,5,3,2,1"}},
                              {22, 6, 7, {"7,5,4,3,2,1", "6,6,4,3,2,1"}},
                              {29, 7, 8, {"8,6,5,4,3,2,1", "7,7,5,4,3,2,1"}}};
  for (const auto& row : rows) {
    const auto& r = all[static_cast<std::size_t>(row.n - 1)];
    c.require(r.profile.tau_max == row.tau_max, "tau_max mismatch at n=" + std::to_string(row.n));
    c.require(r.profile.max_locus.size() == row.size, "|M_n| mismatch at n=" + std::to_string(row.n));
    for (const auto& rep : row.reps) {
      const auto vtx = r.graph.index_of(partgraph::parse_partition(rep));
      c.require(std::ranges::binary_search(r.profile.max_locus, vtx), "(" + rep + ") not in M_n");
    }
  }
  return c;
}

Criterion vertex_count(const std::vector<NResult>& all) {
  Criterion c;
  const auto p = partgraph::oracle::partition_counts(30);
  c.require(all[29].graph.size() == 5604, "|Par(30)| != 5604");
  for (const auto& r : all)
    c.require(static_cast<long long>(r.graph.size()) == p[static_cast<std::size_t>(r.graph.n())],
              "p(n) mismatch at n=" + std::to_string(r.graph.n()));
  return c;
}

Criterion oracle_equivalence(const std::vector<NResult>& all) {
  Criterion c;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (int n = 1; n <= 12; ++n) {
    const auto& r = all[static_cast<std::size_t>(n - 1)];
    for (partgraph::VertexId vtx = 0; vtx < r.graph.size(); ++vtx, ++checked)
      c.require(partgraph::oracle::brute_force_local_dimension(r.graph, vtx) ==
                    partgraph::local_simplex_dimension(r.graph, vtx),
                "mismatch at (" + partgraph::format_partition(r.graph.vertex(vtx)) + ")");
  }
  const double s = seconds_since(t0);
  c.require(s < 60.0, "oracle comparison exceeded 1 minute");
  c.detail += " (" + std::to_string(checked) + " vertices, " + std::to_string(s) + " s)";
  return c;
}

Criterion structural_suite(const std::vector<NResult>& all) {
  Criterion c;
  for (const auto& r : all) {
    const auto& g = r.graph;
    const auto& fw = r.framework;
    const auto& prof = r.profile;
    const int n = g.n();
    if (n >= 2) {
      c.require(v::check_connected(g));
      c.require(v::check_antenna_degree(g));
      c.require(v::check_antenna_rigidity(g, fw, prof));
      c.require(v::check_first_shell_order(g, r.zones.front()));
    }
    if (n <= 20) {
      c.require(v::check_tau_conjugation(g, prof));
      for (const auto& z : r.zones) c.require(v::check_zone_conjugation(g, z));
    }
    if (n == 25 || n == 30) {
      c.require(v::set_is_conjugation_invariant(g, prof.max_locus, "M_n"));
      if (r.zones.size() >= 3) c.require(v::set_is_conjugation_invariant(g, r.zones[2].threshold_zone, "T_{>=3}"));
    }
    c.require(v::check_zone_nesting(r.zones));
    if (r.zones.size() >= 2)
      for (auto a : fw.antenna_vertices)
        c.require(!std::ranges::binary_search(r.zones[1].threshold_zone, a), "antenna in T_{>=2}");
    for (const auto& z : r.zones) c.require(v::check_zone_partition(g, fw, z));
  }
  return c;
}

Criterion rear_central_support(const std::vector<NResult>& all) {
  Criterion c;
  int closest = 1 << 30;
  for (int n = 7; n <= 30; ++n) {
    const auto& r = all[static_cast<std::size_t>(n - 1)];
    const auto dist = partgraph::bfs_distances(r.graph, r.framework.antenna_vertices);
    for (auto m : r.profile.max_locus) closest = std::min(closest, dist[m]);
    for (auto a : r.framework.antenna_vertices)
      c.require(!std::ranges::binary_search(r.profile.max_locus, a), "antenna in M_" + std::to_string(n));
  }
  c.require(closest >= 2, "M_n within distance " + std::to_string(closest) + " of an antenna");
  c.detail += " (closest approach " + std::to_string(closest) + " hops)";
  return c;
}

// compute + tables + atlas figures into `out`.
void full_pipeline(const fs::path& out, unsigned jobs) {
  fs::remove_all(out);
  partgraph::RunConfig cfg;
  cfg.output_dir = out;
  cfg.jobs = jobs;
  partgraph::run_compute(cfg);
  partgraph::run_tables(cfg);
  for (int n : {4, 7, 11, 16, 22, 29})
    for (auto mode : {partgraph::AtlasMode::thickness, partgraph::AtlasMode::zones}) partgraph::run_atlas(cfg, n, mode);
}

Criterion determinism() {
  Criterion c;
  const auto a = fs::temp_directory_path() / "partgraph_accept_jobs1";
  const auto b = fs::temp_directory_path() / "partgraph_accept_jobs8";
  full_pipeline(a, 1);
  full_pipeline(b, 8);
  std::set<std::string> names;
  for (const auto& root : {a, b})
    for (const auto& e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file()) names.insert(fs::relative(e.path(), root).string());
  for (const auto& name : names) {
    const auto x = partgraph::read_file(a / name);
    const auto y = partgraph::read_file(b / name);
    c.require(x && y && *x == *y, "artifact differs: " + name);
  }
  c.detail += " (" + std::to_string(names.size()) + " files compared)";
  fs::remove_all(a);
  fs::remove_all(b);
  return c;
}

// Parses <circle> glyphs and returns one class list per glyph.
std::vector<std::set<std::string>> parse_glyphs(const std::string& svg) {
  static const std::regex circle(R"re(<circle\s+class="([^"]*)")re");
  std::vector<std::set<std::string>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
    std::set<std::string> classes;
    std::istringstream words((*it)[1].str());
    for (std::string w; words >> w;) classes.insert(w);
    out.push_back(std::move(classes));
  }
  return out;
}

Criterion atlas_integrity(const std::vector<NResult>& all) {
  Criterion c;
  for (int n : {4, 7, 11, 16}) {
    const auto& r = all[static_cast<std::size_t>(n - 1)];
    const auto& g = r.graph;
    const auto tag = " at n=" + std::to_string(n);
    const auto t1 = partgraph::exact_regime(r.profile, 1);
    const auto sh2 = partgraph::decompose(g, r.framework, r.profile, 2).shell;
    const auto core3 = partgraph::decompose(g, r.framework, r.profile, 3).core;
    VertexSet covered;
    std::set_union(t1.begin(), t1.end(), sh2.begin(), sh2.end(), std::back_inserter(covered));
    VertexSet covered3;
    std::set_union(covered.begin(), covered.end(), core3.begin(), core3.end(), std::back_inserter(covered3));
    const std::size_t residual = g.size() - covered3.size();

    for (auto mode : {partgraph::AtlasMode::thickness, partgraph::AtlasMode::zones}) {
      const auto glyphs = parse_glyphs(partgraph::render_atlas(g, r.framework, r.profile, mode, r.profile.max_locus));
      std::map<std::string, std::size_t> count;
      for (const auto& cls : glyphs)
        for (const auto& w : cls) ++count[w];
      c.require(glyphs.size() == g.size() && count["vertex"] == g.size(), "glyph count != p(n)" + tag);
      c.require(count["outlined"] == r.profile.max_locus.size(), "outlined count != |M_n|" + tag);
      if (mode != partgraph::AtlasMode::zones) continue;
      std::size_t exclusive = 0;
      for (const auto& cls : glyphs)
        exclusive += cls.count("zone-regime1") + cls.count("zone-skin") + cls.count("zone-core") +
                     cls.count("zone-residual");
      c.require(exclusive == g.size(), "zone fill classes do not partition Par(n)" + tag);
      c.require(count["zone-regime1"] == t1.size(), "gray != |T_{=1}|" + tag);
      c.require(count["in-skin"] == sh2.size(), "blue (skin membership) != |Sh_2|" + tag);
      c.require(count["zone-core"] == core3.size(), "red != |Core_3|" + tag);
      c.require(count["zone-residual"] == residual, "residual mismatch" + tag);
    }
  }
  return c;
}

}  // namespace

int main() {
  std::cout << "computing profiles for 1 <= n <= 30 ...\n" << std::flush;
  auto t0 = Clock::now();
  const auto all = compute_range(30, 1);
  const double serial_s = seconds_since(t0);
  t0 = Clock::now();
  compute_range(30, 8);
  const double parallel_s = seconds_since(t0);

  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"1 first-occurrence values n_r", [&] { return first_occurrence_reproduction(all, serial_s, parallel_s); }},
      {"2 maximal-locus data at transition values", [&] { return maximal_locus_reproduction(all); }},
      {"3 vertex counts p(n), |Par(30)| = 5604", [&] { return vertex_count(all); }},
      {"4 branch-and-bound vs exhaustive oracle, n <= 12", [&] { return oracle_equivalence(all); }},
      {"5 structural property suite", [&] { return structural_suite(all); }},
      {"6 M_n away from antennas, 7 <= n <= 30", [&] { return rear_central_support(all); }},
      {"7 byte-identical artifacts across worker counts", [&] { return determinism(); }},
      {"8 atlas glyph and class counts", [&] { return atlas_integrity(all); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto c = run();
    std::cout << (c.passed ? "PASS " : "FAIL ") << name << c.detail << '\n';
    failed += c.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
