#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "partgraph/partition.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

inline std::pair<Partition, Partition> antennas(int n) { return {Partition::row(n), Partition::column(n)}; }

/// (n), (n-1,1), (n-2,1,1), ..., (1^n)
inline std::vector<Partition> main_chain(int n) {
  std::vector<Partition> out;
  for (int first = n; first >= 1; --first) {
    std::vector<int> parts{first};
    parts.resize(static_cast<std::size_t>(n - first + 1), 1);
    out.emplace_back(std::move(parts));
  }
  return out;
}

/// Two-part partitions (n-k, k), 1 <= k <= floor(n/2).
inline std::vector<Partition> left_boundary(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n / 2; ++k) out.emplace_back(std::vector<int>{n - k, k});
  return out;
}

/// (2^k, 1^(n-2k)), 1 <= k <= floor(n/2); entrywise conjugate of left_boundary.
inline std::vector<Partition> right_boundary(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<int> parts(static_cast<std::size_t>(k), 2);
    parts.resize(static_cast<std::size_t>(n - k), 1);
    out.emplace_back(std::move(parts));
  }
  return out;
}

/// B_n as a tagged vertex set. The three families may overlap.
struct FrameworkSet {
  int n = 0;
  std::pair<Partition, Partition> antennas{Partition::row(1), Partition::row(1)};
  std::vector<Partition> main_chain;
  std::vector<Partition> left_edge;
  std::vector<Partition> right_edge;
  VertexSet all_vertices;
  VertexSet antenna_vertices;

  bool contains(VertexId v) const { return std::binary_search(all_vertices.begin(), all_vertices.end(), v); }
};

inline FrameworkSet boundary_framework(const TransferGraph& g) {
  const int n = g.n();
  FrameworkSet fw;
  fw.n = n;
  fw.antennas = antennas(n);
  fw.main_chain = main_chain(n);
  fw.left_edge = left_boundary(n);
  fw.right_edge = right_boundary(n);
  for (const auto* family : {&fw.main_chain, &fw.left_edge, &fw.right_edge})
    for (const auto& p : *family) fw.all_vertices.push_back(g.index_of(p));
  std::sort(fw.all_vertices.begin(), fw.all_vertices.end());
  fw.all_vertices.erase(std::unique(fw.all_vertices.begin(), fw.all_vertices.end()), fw.all_vertices.end());
  fw.antenna_vertices = {g.index_of(fw.antennas.first), g.index_of(fw.antennas.second)};
  std::sort(fw.antenna_vertices.begin(), fw.antenna_vertices.end());
  fw.antenna_vertices.erase(std::unique(fw.antenna_vertices.begin(), fw.antenna_vertices.end()),
                            fw.antenna_vertices.end());
  return fw;
}

struct AxisSet {
  int n = 0;
  std::vector<Partition> members;  // canonical order
};

inline AxisSet self_conjugate_axis(int n) {
  AxisSet axis{n, {}};
  for (auto& p : enumerate_partitions(n))
    if (is_self_conjugate(p)) axis.members.push_back(std::move(p));
  return axis;
}

}  // namespace partgraph
