#pragma once

#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "partgraph/atlas.hpp"
#include "partgraph/framework.hpp"
#include "partgraph/thickness.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/zones.hpp"

namespace partgraph {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json partition_list(const TransferGraph& g, const VertexSet& s) {
  Json arr = Json::array();
  for (VertexId v : s) arr.push_back(format_partition(g.vertex(v)));
  return arr;
}

inline Json partition_list(std::span<const Partition> ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(format_partition(p));
  return arr;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// "partition,tau" with the partition field quoted, canonical vertex order.
inline std::string profile_csv(const TransferGraph& g, const ThicknessProfile& prof) {
  std::ostringstream out;
  out << "partition,tau\n";
  for (VertexId v = 0; v < g.size(); ++v) out << '"' << format_partition(g.vertex(v)) << "\"," << prof.tau[v] << '\n';
  return out.str();
}

/// Inverse of profile_csv. Rows must list Par(n) in canonical order.
inline ThicknessProfile parse_profile_csv(int n, const std::string& text) {
  const auto vertices = enumerate_partitions(n);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "partition,tau")
    throw std::runtime_error("profile csv: missing header");
  ThicknessProfile prof;
  prof.n = n;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto close = line.rfind("\",");
    if (line.size() < 4 || line.front() != '"' || close == std::string::npos)
      throw std::runtime_error("profile csv: malformed row '" + line + "'");
    const auto p = parse_partition(std::string_view(line).substr(1, close - 1));
    if (prof.tau.size() >= vertices.size() || p != vertices[prof.tau.size()])
      throw std::runtime_error("profile csv: rows out of canonical order at '" + line + "'");
    prof.tau.push_back(std::stoi(line.substr(close + 2)));
  }
  if (prof.tau.size() != vertices.size()) throw std::runtime_error("profile csv: wrong number of rows");
  prof.finalize();
  return prof;
}

inline std::string profile_json(const TransferGraph& g, const ThicknessProfile& prof) {
  Json j;
  j["n"] = prof.n;
  j["tau_max"] = prof.tau_max;
  j["max_locus"] = detail::partition_list(g, prof.max_locus);
  Json tau = Json::object();
  for (VertexId v = 0; v < g.size(); ++v) tau[format_partition(g.vertex(v))] = prof.tau[v];
  j["tau"] = std::move(tau);
  return detail::dump(j);
}

inline std::string framework_json(const TransferGraph& g, const FrameworkSet& fw, const AxisSet& axis) {
  Json j;
  j["n"] = fw.n;
  j["antennas"] = Json::array({format_partition(fw.antennas.first), format_partition(fw.antennas.second)});
  j["main_chain"] = detail::partition_list(fw.main_chain);
  j["left_edge"] = detail::partition_list(fw.left_edge);
  j["right_edge"] = detail::partition_list(fw.right_edge);
  j["all_vertices"] = detail::partition_list(g, fw.all_vertices);
  j["self_conjugate_axis"] = detail::partition_list(axis.members);
  return detail::dump(j);
}

inline std::string zone_json(const TransferGraph& g, const ZoneDecomposition& z) {
  Json j;
  j["n"] = z.n;
  j["r"] = z.r;
  j["threshold"] = detail::partition_list(g, z.threshold_zone);
  j["exact"] = detail::partition_list(g, z.exact_regime);
  j["shell"] = detail::partition_list(g, z.shell);
  j["core"] = detail::partition_list(g, z.core);
  Json comps = Json::array();
  for (const auto& c : z.components)
    comps.push_back({{"vertices", detail::partition_list(g, c.vertices)}, {"boundary_attached", c.boundary_attached}});
  j["components"] = std::move(comps);
  return detail::dump(j);
}

inline Json to_json(const Summary& s) { return {{"mean", s.mean}, {"min", s.min}, {"max", s.max}}; }

inline std::string locus_stats_json(const LocusStats& st) {
  Json j;
  j["n"] = st.n;
  j["size"] = st.size;
  j["balance"] = to_json(st.balance);
  j["antenna_distance"] = to_json(st.antenna_distance);
  j["framework_distance"] = to_json(st.framework_distance);
  j["axis_fraction"] = st.axis_fraction;
  return detail::dump(j);
}

/// Per-n data needed for the cross-n tables.
struct NSummary {
  int n = 0;
  std::size_t partition_count = 0;
  int tau_max = 0;
  std::vector<Partition> max_locus;
};

inline NSummary summarize(const TransferGraph& g, const ThicknessProfile& prof) {
  return {g.n(), g.size(), prof.tau_max, max_thickness_locus(g, prof)};
}

struct Tables {
  std::string first_occurrences_csv;
  std::string summary_csv;
  std::string max_locus_json;
};

inline std::string first_occurrence_csv(const FirstOccurrenceTable& t) {
  std::ostringstream out;
  out << "r,n_r\n";
  if (t.entries.empty())
    out << "# no regime of order r >= 2 occurs for 1 <= n <= " << t.range_max << '\n';
  for (const auto& [r, nr] : t.entries) out << r << ',' << nr << '\n';
  return out.str();
}

/// `rows` must be n = 1..N in order.
inline Tables export_tables(std::span<const NSummary> rows, bool beyond_verified_range = false) {
  std::vector<int> maxima;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].n != static_cast<int>(i) + 1)
      throw std::domain_error("export_tables: range must be contiguous starting at n = 1");
    maxima.push_back(rows[i].tau_max);
  }
  const auto table = first_occurrences(std::span<const int>(maxima));

  Tables t;
  t.first_occurrences_csv = first_occurrence_csv(table);

  std::ostringstream summary;
  summary << "n,p(n),tau_max,|M_n|\n";
  if (beyond_verified_range) summary << "# rows with n > 30 are extrapolation beyond the verified range\n";
  for (const auto& row : rows)
    summary << row.n << ',' << row.partition_count << ',' << row.tau_max << ',' << row.max_locus.size() << '\n';
  t.summary_csv = summary.str();

  Json loci = Json::array();
  for (const auto& [r, nr] : table.entries) {
    const auto& row = rows[static_cast<std::size_t>(nr - 1)];
    loci.push_back({{"r", r},
                    {"n", nr},
                    {"tau_max", row.tau_max},
                    {"size", row.max_locus.size()},
                    {"members", detail::partition_list(row.max_locus)}});
  }
  t.max_locus_json = detail::dump(loci);
  return t;
}

}  // namespace partgraph
