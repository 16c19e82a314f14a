#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "partgraph/framework.hpp"
#include "partgraph/thickness.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

/// T_{>=r}: vertices with tau >= r.
inline VertexSet threshold_zone(const ThicknessProfile& prof, int r) {
  VertexSet out;
  for (std::size_t v = 0; v < prof.tau.size(); ++v)
    if (prof.tau[v] >= r) out.push_back(static_cast<VertexId>(v));
  return out;
}

/// T_{=r}: vertices with tau == r.
inline VertexSet exact_regime(const ThicknessProfile& prof, int r) {
  VertexSet out;
  for (std::size_t v = 0; v < prof.tau.size(); ++v)
    if (prof.tau[v] == r) out.push_back(static_cast<VertexId>(v));
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root, so roots are canonical representatives.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct ZoneComponent {
  VertexSet vertices;
  bool boundary_attached = false;
};

struct ZoneDecomposition {
  int n = 0;
  int r = 0;
  VertexSet threshold_zone;
  VertexSet exact_regime;
  std::vector<ZoneComponent> components;  // ordered by smallest vertex id
  VertexSet shell;
  VertexSet core;
};

/// Components of G_n[T_{>=r}], split into those meeting B_n (shell) and
/// the rest (core).
inline ZoneDecomposition decompose(const TransferGraph& g, const FrameworkSet& framework,
                                   const ThicknessProfile& prof, int r) {
  if (g.n() != framework.n || g.n() != prof.n || prof.tau.size() != g.size())
    throw std::domain_error("decompose: graph, framework and profile are for different n");
  if (r < 0) throw std::domain_error("decompose: r must be nonnegative");

  ZoneDecomposition z;
  z.n = g.n();
  z.r = r;
  z.threshold_zone = threshold_zone(prof, r);
  z.exact_regime = exact_regime(prof, r);

  DisjointSets sets(g.size());
  for (VertexId v : z.threshold_zone)
    for (VertexId w : g.adjacent(v))
      if (w > v && prof.tau[w] >= r) sets.unite(v, w);

  std::map<std::size_t, std::size_t> slot;  // root -> component position
  for (VertexId v : z.threshold_zone) {
    const auto root = sets.find(v);
    auto [it, fresh] = slot.try_emplace(root, z.components.size());
    if (fresh) z.components.emplace_back();
    auto& comp = z.components[it->second];
    comp.vertices.push_back(v);
    if (framework.contains(v)) comp.boundary_attached = true;
  }
  for (const auto& comp : z.components) {
    auto& target = comp.boundary_attached ? z.shell : z.core;
    target.insert(target.end(), comp.vertices.begin(), comp.vertices.end());
  }
  std::sort(z.shell.begin(), z.shell.end());
  std::sort(z.core.begin(), z.core.end());
  return z;
}

/// n_r for r >= 2 over a contiguous computed range 1..range_max. Orders
/// not realized in range are absent.
struct FirstOccurrenceTable {
  std::map<int, int> entries;
  int range_max = 0;

  std::optional<int> at(int r) const {
    auto it = entries.find(r);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
};

/// `tau_max_by_n[i]` is tau_max(i + 1).
inline FirstOccurrenceTable first_occurrences(std::span<const int> tau_max_by_n) {
  FirstOccurrenceTable table;
  table.range_max = static_cast<int>(tau_max_by_n.size());
  for (std::size_t i = 0; i < tau_max_by_n.size(); ++i)
    for (int r = 2; r <= tau_max_by_n[i]; ++r) table.entries.try_emplace(r, static_cast<int>(i) + 1);
  return table;
}

inline FirstOccurrenceTable first_occurrences(std::span<const ThicknessProfile> profiles) {
  std::vector<int> maxima;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].n != static_cast<int>(i) + 1)
      throw std::domain_error("first_occurrences: profiles must cover 1..N contiguously");
    maxima.push_back(profiles[i].tau_max);
  }
  return first_occurrences(std::span<const int>(maxima));
}

}  // namespace partgraph
