// partgraph: command-line front end for the partition transfer graph
// pipeline (compute, tables, atlas, verify, graph-dump).

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "partgraph/pipeline.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void add_range_options(CLI::App* cmd, partgraph::RunConfig& cfg) {
  cmd->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str();
  cmd->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
  cmd->add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();
  cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = auto)")->capture_default_str();
  cmd->add_flag("--allow-beyond-verified-range", cfg.allow_beyond_verified_range,
                "Permit n > 30 (results are extrapolation)");
}

void warn_if_beyond(const partgraph::RunConfig& cfg) {
  if (cfg.n_max > partgraph::kVerifiedRangeMax)
    std::cerr << "warning: n > " << partgraph::kVerifiedRangeMax
              << " lies beyond the verified range; results are extrapolation\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition transfer graph: simplicial thickness, shells, cores and atlas"};
  app.require_subcommand(1);

  partgraph::RunConfig cfg;
  std::string mode = "thickness";
  int atlas_n = 0;
  bool no_compute = false;

  auto* compute = app.add_subcommand("compute", "Compute profiles and zone decompositions for every n in range");
  add_range_options(compute, cfg);

  auto* tables = app.add_subcommand("tables", "Write first-occurrence, summary and maximal-locus tables");
  add_range_options(tables, cfg);
  tables->add_flag("--no-compute", no_compute, "Fail instead of computing profiles missing from --out");

  auto* atlas = app.add_subcommand("atlas", "Render the atlas SVG for one n");
  add_range_options(atlas, cfg);
  atlas->add_option("--n", atlas_n, "n to render")->required();
  atlas->add_option("--mode", mode, "thickness or zones")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every invariant and golden-table check");
  add_range_options(verify, cfg);

  auto* dump = app.add_subcommand("graph-dump", "Print the edge list of G_n");
  dump->add_option("--n", atlas_n, "n")->required();
  dump->add_option("--out", cfg.output_dir, "Write to <out>/nNN/graph.tsv instead of stdout");
  dump->add_flag("--allow-beyond-verified-range", cfg.allow_beyond_verified_range);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      cfg.validate();
      warn_if_beyond(cfg);
      const auto rows = partgraph::run_compute(cfg);
      for (const auto& row : rows)
        std::cout << "n=" << row.n << " p(n)=" << row.partition_count << " tau_max=" << row.tau_max
                  << " |M_n|=" << row.max_locus.size() << '\n';
      return kExitOk;
    }
    if (*tables) {
      cfg.compute_missing = !no_compute;
      cfg.validate();
      warn_if_beyond(cfg);
      const auto t = partgraph::run_tables(cfg);
      std::cout << t.first_occurrences_csv;
      return kExitOk;
    }
    if (*atlas) {
      const auto m = partgraph::parse_atlas_mode(mode);
      warn_if_beyond(cfg);
      std::cout << partgraph::run_atlas(cfg, atlas_n, m).string() << '\n';
      return kExitOk;
    }
    if (*verify) {
      cfg.validate();
      warn_if_beyond(cfg);
      const auto report = partgraph::verify::run_verification(cfg);
      report.print(std::cout);
      return report.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*dump) {
      cfg.n_min = cfg.n_max = atlas_n;
      cfg.validate();
      const auto g = partgraph::build_graph(atlas_n);
      if (dump->count("--out")) {
        std::ostringstream text;
        partgraph::write_edge_list(g, text);
        const auto path = cfg.output_dir / partgraph::n_dirname(atlas_n) / "graph.tsv";
        partgraph::write_file(path, text.str());
        std::cout << path.string() << '\n';
      } else {
        partgraph::write_edge_list(g, std::cout);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
