#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partgraph/framework.hpp"
#include "partgraph/thickness.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/zones.hpp"

namespace partgraph {

/// Drawing position of one vertex: base cell (largest part, number of
/// parts) plus a small offset when the cell is shared.
struct LayoutPoint {
  PartitionIndex vertex;
  int x = 0;
  int y = 0;
  double dx = 0.0;
  double dy = 0.0;
};

inline constexpr double kOffsetRadius = 0.3;

/// Partitions sharing a cell are taken in canonical order and spread on a
/// ring of radius kOffsetRadius, starting straight up.
inline std::vector<LayoutPoint> layout(std::span<const Partition> vertices) {
  std::vector<LayoutPoint> pts;
  std::map<std::pair<int, int>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& p = vertices[i];
    pts.push_back({{p.n(), i}, p.largest_part(), p.length(), 0.0, 0.0});
    cells[{p.largest_part(), p.length()}].push_back(i);
  }
  for (const auto& [cell, members] : cells) {
    if (members.size() < 2) continue;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(k) /
                                                        static_cast<double>(members.size());
      pts[members[k]].dx = kOffsetRadius * std::cos(angle);
      pts[members[k]].dy = kOffsetRadius * std::sin(angle);
    }
  }
  return pts;
}

inline std::vector<LayoutPoint> layout(int n) { return layout(enumerate_partitions(n)); }

enum class AtlasMode { thickness, zones };

inline AtlasMode parse_atlas_mode(std::string_view s) {
  if (s == "thickness") return AtlasMode::thickness;
  if (s == "zones") return AtlasMode::zones;
  throw std::invalid_argument("unknown atlas mode '" + std::string(s) + "' (expected thickness or zones)");
}

inline std::string_view to_string(AtlasMode m) { return m == AtlasMode::thickness ? "thickness" : "zones"; }

struct Palette {
  // tau = 0..8; larger values reuse the last entry.
  std::array<std::string, 9> thickness{"#bdbdbd", "#d9d9d9", "#9ecae1", "#4292c6", "#41ab5d",
                                       "#fdae6b", "#f16913", "#cb181d", "#67000d"};
  std::string regime1 = "#a0a0a0";  // T_{=1}
  std::string skin = "#3b7dd8";     // Sh_2
  std::string core = "#d62728";     // Core_3
  std::string residual = "#ffffff";
  std::string edge = "#c8c8c8";
  std::string outline = "#000000";
};

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

inline bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace detail

/// SVG drawing of G_n. Thickness mode colors by tau; zones mode colors
/// T_{=1} gray, Sh_2 blue and Core_3 red (red wins where Core_3 lies inside
/// Sh_2). Vertices in `highlight` get a black outline. Every vertex glyph is
/// a <circle class="vertex ..."> carrying data-partition and data-tau.
inline std::string render_atlas(const TransferGraph& g, const FrameworkSet& framework,
                                const ThicknessProfile& prof, AtlasMode mode,
                                const std::optional<VertexSet>& highlight = std::nullopt,
                                const Palette& palette = {}) {
  if (prof.n != g.n() || prof.tau.size() != g.size())
    throw std::domain_error("render_atlas: profile does not belong to this graph");
  if (highlight)
    for (VertexId v : *highlight)
      if (v >= g.size()) throw std::domain_error("render_atlas: highlight vertex outside Par(n)");

  const int n = g.n();
  const auto pts = layout(g.vertices());
  constexpr double scale = 60.0;
  constexpr double margin = 50.0;
  const double width = 2 * margin + (n - 1) * scale;
  const double height = 2 * margin + (n - 1) * scale + 30.0;
  const auto px = [&](const LayoutPoint& p) { return margin + (p.x - 1 + p.dx) * scale; };
  // Smaller number of parts is drawn higher.
  const auto py = [&](const LayoutPoint& p) { return 30.0 + margin + (p.y - 1 + p.dy) * scale; };

  VertexSet regime1, skin, core3;
  if (mode == AtlasMode::zones) {
    regime1 = exact_regime(prof, 1);
    skin = decompose(g, framework, prof, 2).shell;
    core3 = decompose(g, framework, prof, 3).core;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fmt2(width)
      << "\" height=\"" << detail::fmt2(height) << "\" viewBox=\"0 0 " << detail::fmt2(width) << ' '
      << detail::fmt2(height) << "\">\n";
  out << "<title>G_" << n << ' ' << to_string(mode) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << detail::fmt2(margin) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">G_"
      << n << " (" << to_string(mode) << "), tau_max = " << prof.tau_max << "</text>\n";

  out << "<g class=\"edges\" stroke=\"" << palette.edge << "\" stroke-width=\"1.2\">\n";
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j : g.adjacent(i))
      if (i < j)
        out << "<line class=\"edge\" x1=\"" << detail::fmt2(px(pts[i])) << "\" y1=\"" << detail::fmt2(py(pts[i]))
            << "\" x2=\"" << detail::fmt2(px(pts[j])) << "\" y2=\"" << detail::fmt2(py(pts[j])) << "\"/>\n";
  out << "</g>\n";

  out << "<g class=\"vertices\">\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    const int tau = prof.tau[v];
    std::string cls = "vertex";
    std::string fill;
    if (mode == AtlasMode::thickness) {
      cls += " tau-" + std::to_string(tau);
      fill = palette.thickness[static_cast<std::size_t>(std::min(tau, 8))];
    } else {
      const bool in_regime1 = detail::contains(regime1, v);
      const bool in_skin = detail::contains(skin, v);
      const bool in_core = detail::contains(core3, v);
      if (in_core) {
        cls += " zone-core";
        fill = palette.core;
      } else if (in_skin) {
        cls += " zone-skin";
        fill = palette.skin;
      } else if (in_regime1) {
        cls += " zone-regime1";
        fill = palette.regime1;
      } else {
        cls += " zone-residual";
        fill = palette.residual;
      }
      if (in_skin) cls += " in-skin";
      if (in_core) cls += " in-core";
    }
    const bool outlined = highlight && detail::contains(*highlight, v);
    if (outlined) cls += " outlined";
    out << "<circle class=\"" << cls << "\" data-partition=\"" << format_partition(g.vertex(v))
        << "\" data-tau=\"" << tau << "\" cx=\"" << detail::fmt2(px(pts[v])) << "\" cy=\""
        << detail::fmt2(py(pts[v])) << "\" r=\"7.00\" fill=\"" << fill << "\" stroke=\""
        << (outlined ? palette.outline : palette.edge) << "\" stroke-width=\"" << (outlined ? "2.50" : "1.00")
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

struct Summary {
  double mean = 0.0;
  int min = 0;
  int max = 0;
};

/// Descriptive placement statistics of a vertex set S in G_n.
struct LocusStats {
  int n = 0;
  std::size_t size = 0;
  Summary balance;               // largest part minus number of parts
  Summary antenna_distance;      // hops to the nearer antenna
  Summary framework_distance;    // hops to B_n
  double axis_fraction = 0.0;    // share of S that is self-conjugate
};

inline LocusStats locus_statistics(const TransferGraph& g, const FrameworkSet& framework, const VertexSet& s) {
  if (s.empty()) throw std::domain_error("locus_statistics: empty vertex set");
  for (VertexId v : s)
    if (v >= g.size()) throw std::domain_error("locus_statistics: vertex outside Par(n)");

  const auto to_antenna = bfs_distances(g, framework.antenna_vertices);
  const auto to_framework = bfs_distances(g, framework.all_vertices);
  const auto summarize = [&](auto value) {
    Summary out{0.0, value(s.front()), value(s.front())};
    long long total = 0;
    for (VertexId v : s) {
      const int x = value(v);
      total += x;
      out.min = std::min(out.min, x);
      out.max = std::max(out.max, x);
    }
    out.mean = static_cast<double>(total) / static_cast<double>(s.size());
    return out;
  };

  LocusStats st;
  st.n = g.n();
  st.size = s.size();
  st.balance = summarize([&](VertexId v) { return g.vertex(v).largest_part() - g.vertex(v).length(); });
  st.antenna_distance = summarize([&](VertexId v) { return to_antenna[v]; });
  st.framework_distance = summarize([&](VertexId v) { return to_framework[v]; });
  std::size_t on_axis = 0;
  for (VertexId v : s) on_axis += is_self_conjugate(g.vertex(v)) ? 1 : 0;
  st.axis_fraction = static_cast<double>(on_axis) / static_cast<double>(s.size());
  return st;
}

}  // namespace partgraph
