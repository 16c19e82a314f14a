#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partgraph/bitset.hpp"
#include "partgraph/partition.hpp"

namespace partgraph {

using VertexId = std::uint32_t;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// All partitions reachable from p by moving one unit from one part to
/// another part or to a new part of size 1, re-sorted. Excludes p itself.
/// Returned in canonical order.
inline std::vector<Partition> neighbors(const Partition& p) {
  const auto src = p.parts();
  std::vector<Partition> out;
  std::vector<int> work;
  for (std::size_t from = 0; from < src.size(); ++from) {
    for (std::size_t to = 0; to <= src.size(); ++to) {
      if (to == from) continue;
      work.assign(src.begin(), src.end());
      work.push_back(0);
      --work[from];
      ++work[to];
      std::erase(work, 0);
      std::sort(work.begin(), work.end(), std::greater<>());
      Partition q(work);
      if (q != p) out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// G_n: vertices in canonical order, adjacency as sorted index lists plus
/// one bitset row per vertex. Immutable once built.
class TransferGraph {
 public:
  TransferGraph(int n, std::vector<Partition> vertices, std::vector<VertexSet> adjacency)
      : n_(n), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
    rows_.reserve(vertices_.size());
    for (const auto& nb : adjacency_) {
      Bitset row(vertices_.size());
      for (VertexId j : nb) row.set(j);
      rows_.push_back(std::move(row));
      edges_ += nb.size();
    }
    edges_ /= 2;
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  const std::vector<Partition>& vertices() const noexcept { return vertices_; }
  const Partition& vertex(VertexId v) const { return vertices_.at(v); }
  std::span<const VertexId> adjacent(VertexId v) const { return adjacency_.at(v); }
  const Bitset& row(VertexId v) const { return rows_.at(v); }
  bool has_edge(VertexId a, VertexId b) const { return rows_.at(a).test(b); }

  std::optional<VertexId> find(const Partition& p) const {
    if (p.n() != n_) return std::nullopt;
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p, CanonicalLess{});
    if (it == vertices_.end() || *it != p) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
  }

  /// Like find, but a partition of another n is a domain error.
  VertexId index_of(const Partition& p) const {
    if (auto v = find(p)) return *v;
    throw std::domain_error("partition " + format_partition(p) + " is not a vertex of G_" +
                            std::to_string(n_));
  }

  PartitionIndex partition_index(VertexId v) const { return {n_, v}; }

 private:
  int n_;
  std::vector<Partition> vertices_;
  std::vector<VertexSet> adjacency_;
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

inline TransferGraph build_graph(int n) {
  if (n < 1) throw std::domain_error("build_graph: n must be >= 1, got " + std::to_string(n));
  auto vertices = enumerate_partitions(n);
  const auto lookup = [&](const Partition& p) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p, CanonicalLess{});
    return static_cast<VertexId>(it - vertices.begin());
  };
  std::vector<VertexSet> adjacency(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (const auto& q : neighbors(vertices[i])) adjacency[i].push_back(lookup(q));

  // Both directions were generated independently; they must agree.
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (VertexId j : adjacency[i]) {
      if (j == i) throw std::logic_error("transfer graph has a self-loop");
      const auto& back = adjacency[j];
      if (!std::binary_search(back.begin(), back.end(), static_cast<VertexId>(i)))
        throw std::logic_error("transfer graph adjacency is not symmetric");
    }
  }
  return TransferGraph(n, std::move(vertices), std::move(adjacency));
}

/// Hop distances from a set of sources; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const TransferGraph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(g.size(), -1);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.adjacent(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const TransferGraph& g) {
  if (g.size() == 0) return true;
  const VertexId root = 0;
  const auto dist = bfs_distances(g, std::span(&root, 1));
  return std::ranges::all_of(dist, [](int d) { return d >= 0; });
}

/// Connectivity of the subgraph induced on `members`.
inline bool is_induced_connected(const TransferGraph& g, const VertexSet& members) {
  if (members.empty()) return true;
  Bitset in(g.size());
  for (VertexId v : members) in.set(v);
  Bitset seen(g.size());
  std::vector<VertexId> stack{members.front()};
  seen.set(members.front());
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.adjacent(v)) {
      if (in.test(w) && !seen.test(w)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

inline std::size_t degree(const TransferGraph& g, const Partition& p) {
  return g.adjacent(g.index_of(p)).size();
}

/// One edge per line, "a<TAB>b" with a before b canonically, edges in
/// canonical order of (a, b).
inline void write_edge_list(const TransferGraph& g, std::ostream& out) {
  for (VertexId i = 0; i < g.size(); ++i)
    for (VertexId j : g.adjacent(i))
      if (i < j) out << format_partition(g.vertex(i)) << '\t' << format_partition(g.vertex(j)) << '\n';
}

}  // namespace partgraph
