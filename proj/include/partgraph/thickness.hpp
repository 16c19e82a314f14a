#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

#include "partgraph/max_clique.hpp"
#include "partgraph/transfer_graph.hpp"

namespace partgraph {

/// tau over all vertices of one G_n, plus its maximum and the locus M_n.
struct ThicknessProfile {
  int n = 0;
  std::vector<int> tau;  // indexed by VertexId
  int tau_max = 0;
  VertexSet max_locus;

  /// Fills tau_max and max_locus from tau.
  void finalize() {
    tau_max = tau.empty() ? 0 : *std::max_element(tau.begin(), tau.end());
    max_locus.clear();
    for (std::size_t v = 0; v < tau.size(); ++v)
      if (tau[v] == tau_max) max_locus.push_back(static_cast<VertexId>(v));
  }
};

namespace detail {

// Bitset rows of the subgraph induced on the neighbors of v, in the order
// of g.adjacent(v).
inline std::vector<Bitset> neighborhood_rows(const TransferGraph& g, VertexId v) {
  const auto nb = g.adjacent(v);
  std::vector<Bitset> rows(nb.size(), Bitset(nb.size()));
  for (std::size_t a = 0; a < nb.size(); ++a) {
    const Bitset& full = g.row(nb[a]);
    for (std::size_t b = 0; b < nb.size(); ++b)
      if (full.test(nb[b])) rows[a].set(b);
  }
  return rows;
}

}  // namespace detail

/// Largest clique through v, minus one. Every clique through v is v plus a
/// clique of its neighborhood, so this is the maximum clique of G[N(v)].
inline int local_simplex_dimension(const TransferGraph& g, VertexId v) {
  if (g.adjacent(v).empty()) return 0;
  const auto rows = detail::neighborhood_rows(g, v);
  return static_cast<int>(max_clique_size(rows));
}

inline int local_simplex_dimension(const TransferGraph& g, const Partition& p) {
  return local_simplex_dimension(g, g.index_of(p));
}

/// A maximum clique containing v, as sorted vertex ids (v included).
inline VertexSet max_clique_witness(const TransferGraph& g, VertexId v) {
  VertexSet out{v};
  const auto nb = g.adjacent(v);
  if (!nb.empty()) {
    const auto rows = detail::neighborhood_rows(g, v);
    MaxCliqueSolver solver(rows);
    solver.solve();
    for (std::size_t local : solver.witness()) out.push_back(nb[local]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact tau for every vertex. `jobs` = 0 picks hardware concurrency; the
/// result does not depend on it.
inline ThicknessProfile thickness_profile(const TransferGraph& g, unsigned jobs = 1) {
  ThicknessProfile prof;
  prof.n = g.n();
  prof.tau.assign(g.size(), 0);
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, g.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t v; (v = next.fetch_add(1, std::memory_order_relaxed)) < g.size();)
      prof.tau[v] = local_simplex_dimension(g, static_cast<VertexId>(v));
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  prof.finalize();
  return prof;
}

/// M_n as partitions, canonical order.
inline std::vector<Partition> max_thickness_locus(const TransferGraph& g, const ThicknessProfile& prof) {
  std::vector<Partition> out;
  for (VertexId v : prof.max_locus) out.push_back(g.vertex(v));
  return out;
}

}  // namespace partgraph
