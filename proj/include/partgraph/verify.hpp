#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "partgraph/atlas.hpp"
#include "partgraph/framework.hpp"
#include "partgraph/oracles.hpp"
#include "partgraph/pipeline.hpp"
#include "partgraph/thickness.hpp"
#include "partgraph/transfer_graph.hpp"
#include "partgraph/zones.hpp"

namespace partgraph::verify {

/// nullopt on success, otherwise a description of the first failure.
using Outcome = std::optional<std::string>;

struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed = true;
  std::string detail;
  int runs = 0;
};

/// Accumulates outcomes per named check; a check fails if any run fails.
class Report {
 public:
  void record(const std::string& name, const std::string& anchor, const Outcome& outcome) {
    auto [it, fresh] = index_.try_emplace(name, results_.size());
    if (fresh) results_.push_back({name, anchor, true, {}, 0});
    auto& r = results_[it->second];
    ++r.runs;
    if (outcome && r.passed) {
      r.passed = false;
      r.detail = *outcome;
    }
  }

  bool ok() const {
    return std::ranges::all_of(results_, [](const CheckResult& r) { return r.passed; });
  }
  const std::vector<CheckResult>& results() const { return results_; }

  void print(std::ostream& out) const {
    for (const auto& r : results_) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  {" << r.anchor << "}";
      if (!r.passed) out << "  -- " << r.detail;
      out << '\n';
    }
    const auto failed = std::ranges::count_if(results_, [](const CheckResult& r) { return !r.passed; });
    out << results_.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
  }

 private:
  std::vector<CheckResult> results_;
  std::map<std::string, std::size_t> index_;
};

inline std::string name_of(const TransferGraph& g, VertexId v) { return "(" + format_partition(g.vertex(v)) + ")"; }

/// v -> index of conjugate(v).
inline std::vector<VertexId> conjugation_map(const TransferGraph& g) {
  std::vector<VertexId> map(g.size());
  for (VertexId v = 0; v < g.size(); ++v) map[v] = g.index_of(conjugate(g.vertex(v)));
  return map;
}

inline Outcome set_is_conjugation_invariant(const TransferGraph& g, const VertexSet& s, std::string_view what) {
  const auto conj = conjugation_map(g);
  for (VertexId v : s)
    if (!std::binary_search(s.begin(), s.end(), conj[v]))
      return std::string(what) + " at n=" + std::to_string(g.n()) + " contains " + name_of(g, v) +
             " but not its conjugate";
  return std::nullopt;
}

inline bool subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// --- partitions -----------------------------------------------------------

inline Outcome check_partition_count(int n) {
  const auto expected = oracle::partition_counts(n)[static_cast<std::size_t>(n)];
  const auto got = static_cast<long long>(enumerate_partitions(n).size());
  if (got != expected)
    return "p(" + std::to_string(n) + ") enumerated " + std::to_string(got) + ", recurrence gives " +
           std::to_string(expected);
  return std::nullopt;
}

inline Outcome check_conjugation_involution(const TransferGraph& g) {
  for (const auto& p : g.vertices()) {
    const auto c = conjugate(p);
    if (conjugate(c) != p) return "conjugation not an involution at (" + format_partition(p) + ")";
    if (c.length() != p.largest_part() || c.largest_part() != p.length())
      return "conjugation does not swap largest part and length at (" + format_partition(p) + ")";
  }
  return std::nullopt;
}

inline Outcome check_enumeration_extremes(const TransferGraph& g) {
  if (g.vertices().front() != Partition::row(g.n()) || g.vertices().back() != Partition::column(g.n()))
    return "enumeration of n=" + std::to_string(g.n()) + " does not start at (n) and end at (1^n)";
  return std::nullopt;
}

// --- transfer graph -------------------------------------------------------

inline Outcome check_simple_symmetric(const TransferGraph& g) {
  std::size_t degree_sum = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto nb = g.adjacent(v);
    degree_sum += nb.size();
    if (!std::is_sorted(nb.begin(), nb.end()) || std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      return "adjacency of " + name_of(g, v) + " is not a sorted set";
    for (VertexId w : nb) {
      if (w == v) return "self-loop at " + name_of(g, v);
      if (!g.has_edge(w, v)) return "asymmetric edge " + name_of(g, v) + "-" + name_of(g, w);
    }
  }
  if (degree_sum != 2 * g.edge_count()) return "edge count is not half the degree sum";
  return std::nullopt;
}

inline Outcome check_conjugation_automorphism(const TransferGraph& g) {
  const auto conj = conjugation_map(g);
  for (VertexId v = 0; v < g.size(); ++v)
    for (VertexId w : g.adjacent(v))
      if (!g.has_edge(conj[v], conj[w]))
        return "conjugation breaks edge " + name_of(g, v) + "-" + name_of(g, w);
  return std::nullopt;
}

inline Outcome check_connected(const TransferGraph& g) {
  if (!is_connected(g)) return "G_" + std::to_string(g.n()) + " is disconnected";
  return std::nullopt;
}

inline Outcome check_antenna_degree(const TransferGraph& g) {
  if (g.n() < 2) return std::nullopt;
  for (const auto& a : {Partition::row(g.n()), Partition::column(g.n())})
    if (degree(g, a) != 1) return "antenna (" + format_partition(a) + ") has degree " + std::to_string(degree(g, a));
  return std::nullopt;
}

inline Outcome check_is_path(const TransferGraph& g, const std::vector<Partition>& path, std::string_view what) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(g.index_of(path[i]), g.index_of(path[i + 1])))
      return std::string(what) + " is not a path at n=" + std::to_string(g.n()) + ": (" + format_partition(path[i]) +
             ") and (" + format_partition(path[i + 1]) + ") not adjacent";
  return std::nullopt;
}

// --- framework ------------------------------------------------------------

inline Outcome check_framework(const TransferGraph& g, const FrameworkSet& fw) {
  for (VertexId a : fw.antenna_vertices)
    if (!fw.contains(a)) return "B_n misses antenna " + name_of(g, a);
  if (fw.main_chain.front() != fw.antennas.first || fw.main_chain.back() != fw.antennas.second)
    return "main chain does not join the antennas";
  for (std::size_t k = 0; k < fw.left_edge.size(); ++k)
    if (conjugate(fw.left_edge[k]) != fw.right_edge[k]) return "right boundary is not the conjugate of the left";
  if (auto o = set_is_conjugation_invariant(g, fw.all_vertices, "B_n")) return o;
  if (auto o = check_is_path(g, fw.main_chain, "main chain")) return o;
  if (auto o = check_is_path(g, fw.left_edge, "left boundary")) return o;
  if (auto o = check_is_path(g, fw.right_edge, "right boundary")) return o;
  if (g.n() >= 2 && !is_induced_connected(g, fw.all_vertices)) return "G_n[B_n] is disconnected";
  return std::nullopt;
}

inline Outcome check_axis(int n) {
  const auto axis = self_conjugate_axis(n);
  for (const auto& p : axis.members)
    if (conjugate(p) != p) return "axis member (" + format_partition(p) + ") is not self-conjugate";
  const auto expected = oracle::distinct_odd_part_count(n);
  if (static_cast<long long>(axis.members.size()) != expected)
    return "axis size " + std::to_string(axis.members.size()) + " at n=" + std::to_string(n) +
           " but distinct-odd-part count is " + std::to_string(expected);
  return std::nullopt;
}

// --- thickness ------------------------------------------------------------

inline Outcome check_tau_conjugation(const TransferGraph& g, const ThicknessProfile& prof) {
  const auto conj = conjugation_map(g);
  for (VertexId v = 0; v < g.size(); ++v)
    if (prof.tau[v] != prof.tau[conj[v]])
      return "tau" + name_of(g, v) + " = " + std::to_string(prof.tau[v]) + " but tau" + name_of(g, conj[v]) + " = " +
             std::to_string(prof.tau[conj[v]]);
  return set_is_conjugation_invariant(g, prof.max_locus, "M_n");
}

inline Outcome check_oracle_equivalence(const TransferGraph& g, const ThicknessProfile& prof) {
  for (VertexId v = 0; v < g.size(); ++v) {
    const int brute = oracle::brute_force_local_dimension(g, v);
    if (brute != prof.tau[v])
      return "tau" + name_of(g, v) + " = " + std::to_string(prof.tau[v]) + ", exhaustive enumeration gives " +
             std::to_string(brute);
  }
  return std::nullopt;
}

inline Outcome check_profile_bounds(const TransferGraph& g, const ThicknessProfile& prof) {
  for (VertexId v = 0; v < g.size(); ++v) {
    if (prof.tau[v] > static_cast<int>(g.adjacent(v).size())) return "tau exceeds degree at " + name_of(g, v);
    if ((prof.tau[v] == 0) != g.adjacent(v).empty()) return "tau = 0 at non-isolated vertex " + name_of(g, v);
  }
  return std::nullopt;
}

inline Outcome check_antenna_rigidity(const TransferGraph& g, const FrameworkSet& fw, const ThicknessProfile& prof) {
  if (g.n() < 2) return std::nullopt;
  for (VertexId a : fw.antenna_vertices) {
    if (prof.tau[a] != 1) return "antenna " + name_of(g, a) + " has tau " + std::to_string(prof.tau[a]);
    if (prof.tau_max >= 2 && std::ranges::binary_search(prof.max_locus, a))
      return "antenna " + name_of(g, a) + " lies in M_n";
  }
  return std::nullopt;
}

// --- zones ----------------------------------------------------------------

inline Outcome check_zone_partition(const TransferGraph& g, const FrameworkSet& fw, const ZoneDecomposition& z) {
  VertexSet joined;
  std::set_union(z.shell.begin(), z.shell.end(), z.core.begin(), z.core.end(), std::back_inserter(joined));
  VertexSet common;
  std::set_intersection(z.shell.begin(), z.shell.end(), z.core.begin(), z.core.end(), std::back_inserter(common));
  if (!common.empty() || joined != z.threshold_zone)
    return "shell and core do not partition T_{>=" + std::to_string(z.r) + "} at n=" + std::to_string(z.n);
  for (const auto& c : z.components) {
    const bool meets = std::ranges::any_of(c.vertices, [&](VertexId v) { return fw.contains(v); });
    if (meets != c.boundary_attached) return "wrong boundary flag on a component at n=" + std::to_string(z.n);
    if (!is_induced_connected(g, c.vertices)) return "component is not connected at n=" + std::to_string(z.n);
  }
  return std::nullopt;
}

/// zones[i] is the decomposition for r = i + 1.
inline Outcome check_zone_nesting(const std::vector<ZoneDecomposition>& zones) {
  for (std::size_t i = 0; i + 1 < zones.size(); ++i) {
    if (!subset(zones[i + 1].shell, zones[i].shell))
      return "Sh_" + std::to_string(zones[i + 1].r) + " not inside Sh_" + std::to_string(zones[i].r);
    if (!subset(zones[i + 1].threshold_zone, zones[i].threshold_zone)) return "threshold zones not nested";
  }
  for (std::size_t i = 2; i < zones.size(); ++i) {
    if (!subset(zones[i].threshold_zone, zones[1].threshold_zone))
      return "T_{>=" + std::to_string(zones[i].r) + "} not inside T_{>=2}";
    if (!subset(zones[i].shell, zones[1].shell)) return "Sh_" + std::to_string(zones[i].r) + " not inside Sh_2";
  }
  return std::nullopt;
}

inline Outcome check_zone_conjugation(const TransferGraph& g, const ZoneDecomposition& z) {
  const std::string tag = "_" + std::to_string(z.r);
  if (auto o = set_is_conjugation_invariant(g, z.threshold_zone, "T_{>=r}" + tag)) return o;
  if (auto o = set_is_conjugation_invariant(g, z.exact_regime, "T_{=r}" + tag)) return o;
  if (auto o = set_is_conjugation_invariant(g, z.shell, "Sh" + tag)) return o;
  return set_is_conjugation_invariant(g, z.core, "Core" + tag);
}

inline Outcome check_first_shell_order(const TransferGraph& g, const ZoneDecomposition& z1) {
  if (g.n() < 2) {
    if (!z1.threshold_zone.empty()) return "T_{>=1}(1) is not empty";
    return std::nullopt;
  }
  if (z1.shell.size() != g.size() || !z1.core.empty())
    return "Sh_1 != Par(n) or Core_1 != {} at n=" + std::to_string(g.n());
  return std::nullopt;
}

inline Outcome check_skin(const TransferGraph& g, const FrameworkSet& fw, const ZoneDecomposition& z2) {
  for (VertexId a : fw.antenna_vertices)
    if (std::ranges::binary_search(z2.threshold_zone, a)) return "antenna " + name_of(g, a) + " in Sh_2 or Core_2";
  for (const auto& c : z2.components) {
    if (!c.boundary_attached) continue;
    const bool meets_away = std::ranges::any_of(c.vertices, [&](VertexId v) {
      return fw.contains(v) && !std::ranges::binary_search(fw.antenna_vertices, v);
    });
    if (!meets_away) return "a component of Sh_2 meets B_n only at an antenna";
  }
  return std::nullopt;
}

// --- atlas ----------------------------------------------------------------

inline Outcome check_layout_symmetry(const TransferGraph& g) {
  const auto pts = layout(g.vertices());
  const auto conj = conjugation_map(g);
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& p = pts[v];
    const auto& q = pts[conj[v]];
    if (p.x != q.y || p.y != q.x) return "layout cell of the conjugate of " + name_of(g, v) + " is not transposed";
    if (std::abs(p.dx) >= 0.5 || std::abs(p.dy) >= 0.5) return "offset too large at " + name_of(g, v);
  }
  return std::nullopt;
}

/// Class-name counts over the <circle> glyphs of an SVG produced by render_atlas.
inline std::map<std::string, std::size_t> glyph_class_counts(const std::string& svg) {
  std::map<std::string, std::size_t> counts;
  const std::string open = "<circle class=\"";
  for (auto pos = svg.find(open); pos != std::string::npos; pos = svg.find(open, pos + 1)) {
    const auto start = pos + open.size();
    const auto end = svg.find('"', start);
    std::string_view classes(svg.data() + start, end - start);
    while (!classes.empty()) {
      const auto space = classes.find(' ');
      ++counts[std::string(classes.substr(0, space))];
      if (space == std::string_view::npos) break;
      classes.remove_prefix(space + 1);
    }
  }
  return counts;
}

/// Renders both modes twice; checks byte-determinism, glyph counts, and
/// that zone fill classes partition Par(n) with the expected sizes.
inline Outcome check_atlas(const TransferGraph& g, const FrameworkSet& fw, const ThicknessProfile& prof) {
  for (auto mode : {AtlasMode::thickness, AtlasMode::zones}) {
    const auto a = render_atlas(g, fw, prof, mode, prof.max_locus);
    if (a != render_atlas(g, fw, prof, mode, prof.max_locus)) return "atlas rendering is not deterministic";
    auto counts = glyph_class_counts(a);
    if (counts["vertex"] != g.size()) return "glyph count differs from p(n)";
    if (counts["outlined"] != prof.max_locus.size()) return "outlined glyph count differs from |M_n|";
    if (counts["edge"] != 0) return "edge drawn as a glyph";
    if (mode == AtlasMode::zones) {
      const auto t1 = exact_regime(prof, 1).size();
      const auto sh2 = decompose(g, fw, prof, 2).shell;
      const auto c3 = decompose(g, fw, prof, 3).core;
      VertexSet skin_only;
      std::set_difference(sh2.begin(), sh2.end(), c3.begin(), c3.end(), std::back_inserter(skin_only));
      const auto fills = counts["zone-regime1"] + counts["zone-skin"] + counts["zone-core"] + counts["zone-residual"];
      if (fills != g.size()) return "zone fill classes do not partition Par(n)";
      if (counts["zone-core"] != c3.size() || counts["in-core"] != c3.size()) return "red class differs from |Core_3|";
      if (counts["in-skin"] != sh2.size()) return "skin membership differs from |Sh_2|";
      if (counts["zone-skin"] != skin_only.size()) return "blue fill differs from |Sh_2 \\ Core_3|";
      if (counts["zone-regime1"] != t1) return "gray class differs from |T_{=1}|";
    }
  }
  return std::nullopt;
}

// --- golden values --------------------------------------------------------

/// Published first occurrences n_r.
inline const std::map<int, int>& expected_first_occurrences() {
  static const std::map<int, int> t{{2, 4}, {3, 7}, {4, 11}, {5, 16}, {6, 22}, {7, 29}};
  return t;
}

struct LocusRow {
  int n;
  int tau_max;
  std::size_t size;
  std::vector<std::string> representatives;
};

/// Published maximal-locus rows.
inline const std::vector<LocusRow>& expected_locus_rows() {
  static const std::vector<LocusRow> rows{
      {7, 3, 4, {"4,2,1", "3,3,1"}},
      {11, 4, 5, {"5,3,2,1", "4,4,2,1"}},
      {16, 5, 6, {"6,4,3,2,1", "5,5,3,2,1"}},
      {22, 6, 7, {"7,5,4,3,2,1", "6,6,4,3,2,1"}},
      {29, 7, 8, {"8,6,5,4,3,2,1", "7,7,5,4,3,2,1"}},
  };
  return rows;
}

inline Outcome check_first_occurrences(const FirstOccurrenceTable& got) {
  std::map<int, int> expected;
  for (auto [r, nr] : expected_first_occurrences())
    if (nr <= got.range_max) expected.emplace(r, nr);
  if (got.entries != expected) {
    std::string s = "computed {";
    for (auto [r, nr] : got.entries) s += " " + std::to_string(r) + ":" + std::to_string(nr);
    return s + " } differs from the published table";
  }
  int prev = 0;
  for (auto [r, nr] : got.entries) {
    if (nr <= prev) return "first occurrences are not strictly increasing";
    prev = nr;
  }
  return std::nullopt;
}

inline Outcome check_locus_row(const TransferGraph& g, const ThicknessProfile& prof, const LocusRow& row) {
  if (prof.tau_max != row.tau_max || prof.max_locus.size() != row.size)
    return "n=" + std::to_string(row.n) + ": (tau_max, |M_n|) = (" + std::to_string(prof.tau_max) + "," +
           std::to_string(prof.max_locus.size()) + ")";
  for (const auto& rep : row.representatives) {
    const auto v = g.index_of(parse_partition(rep));
    if (!std::ranges::binary_search(prof.max_locus, v)) return "(" + rep + ") not in M_" + std::to_string(row.n);
  }
  return std::nullopt;
}

/// Minimum hop distance from M_n to the antennas must be at least 2.
inline Outcome check_locus_away_from_antennas(const TransferGraph& g, const FrameworkSet& fw,
                                              const ThicknessProfile& prof) {
  const auto st = locus_statistics(g, fw, prof.max_locus);
  if (st.antenna_distance.min < 2)
    return "M_" + std::to_string(g.n()) + " comes within " + std::to_string(st.antenna_distance.min) +
           " of an antenna";
  return std::nullopt;
}

// --- driver ---------------------------------------------------------------

/// Every per-n check for one computed n.
inline void check_n(Report& rep, const NResult& res) {
  const auto& g = res.graph;
  const auto& fw = res.framework;
  const auto& prof = res.profile;
  const int n = g.n();

  rep.record("partition count matches pentagonal recurrence", "vertex count of G_n", check_partition_count(n));
  rep.record("conjugation is an involution swapping largest part and length", "conjugation action",
             check_conjugation_involution(g));
  rep.record("enumeration starts at (n) and ends at (1^n)", "canonical vertex order", check_enumeration_extremes(g));
  rep.record("adjacency simple, symmetric, edge count = half degree sum", "partition graph definition",
             check_simple_symmetric(g));
  rep.record("conjugation is a graph automorphism", "conjugation action", check_conjugation_automorphism(g));
  if (n >= 2) rep.record("G_n connected", "connectivity lemma", check_connected(g));
  rep.record("antennas have degree 1", "antenna proposition", check_antenna_degree(g));
  rep.record("boundary framework: antennas, paths, conjugation invariance, connected", "boundary framework",
             check_framework(g, fw));
  rep.record("axis size equals distinct-odd-part count", "self-conjugate axis", check_axis(n));
  rep.record("tau and M_n conjugation invariant", "conjugation invariance of thickness",
             check_tau_conjugation(g, prof));
  if (n <= 12)
    rep.record("branch-and-bound tau equals exhaustive clique enumeration", "exact thickness computation",
               check_oracle_equivalence(g, prof));
  rep.record("tau <= degree, tau = 0 only when isolated", "one-dimensional regime", check_profile_bounds(g, prof));
  rep.record("antennas have tau = 1 and avoid M_n", "antenna proposition", check_antenna_rigidity(g, fw, prof));

  for (const auto& z : res.zones) {
    rep.record("shell and core partition the threshold zone", "shell/core definition", check_zone_partition(g, fw, z));
    rep.record("zones, shells, cores conjugation invariant", "conjugation invariance of zones",
               check_zone_conjugation(g, z));
  }
  const ZoneDecomposition z1 = res.zones.empty() ? decompose(g, fw, prof, 1) : res.zones.front();
  rep.record("Sh_1 = Par(n), Core_1 empty", "order 2 is the first shell order", check_first_shell_order(g, z1));
  rep.record("Sh_{r+1} in Sh_r, T_{>=r} in T_{>=2}", "nesting of higher regimes", check_zone_nesting(res.zones));
  if (res.zones.size() >= 2)
    rep.record("antennas outside T_{>=2}; skin meets B_n away from antennas", "triangular skin corollaries",
               check_skin(g, fw, res.zones[1]));
  rep.record("layout cell of conjugate is transposed", "atlas layout", check_layout_symmetry(g));
  rep.record("atlas deterministic with exact glyph and class counts", "atlas figures", check_atlas(g, fw, prof));

  if (n >= 7) rep.record("M_n at distance >= 2 from antennas", "rear-central observation",
                         check_locus_away_from_antennas(g, fw, prof));
  for (const auto& row : expected_locus_rows())
    if (row.n == n) rep.record("maximal-locus table row n=" + std::to_string(n), "maximal-locus table",
                               check_locus_row(g, prof, row));
  if (n == 30)
    rep.record("|Par(30)| = 5604", "largest graph considered",
               g.size() == 5604 ? Outcome{} : Outcome{"|Par(30)| = " + std::to_string(g.size())});
}

/// Runs the whole suite over cfg's range.
inline Report run_verification(const RunConfig& cfg, std::ostream* progress = nullptr) {
  cfg.validate();
  Report rep;
  std::vector<int> maxima;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto res = compute_n(n, cfg.jobs);
    check_n(rep, res);
    maxima.push_back(res.profile.tau_max);
    if (progress) *progress << "verified n=" << n << '\n';
  }
  if (cfg.n_min == 1) {
    rep.record("first-occurrence table exact match", "first-occurrence table",
               check_first_occurrences(first_occurrences(std::span<const int>(maxima))));
  }
  return rep;
}

}  // namespace partgraph::verify
