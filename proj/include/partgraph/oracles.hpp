#pragma once

// Independent reference computations used by the verification suite. None
// of this shares code with the optimized paths it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "partgraph/transfer_graph.hpp"

namespace partgraph::oracle {

/// p(0..max_n) by Euler's pentagonal number recurrence.
inline std::vector<std::int64_t> partition_counts(int max_n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= max_n; ++m) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p;
}

/// Number of partitions of n into distinct odd parts (equinumerous with
/// self-conjugate partitions), by 0/1 knapsack counting.
inline std::int64_t distinct_odd_part_count(int n) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; part += 2)
    for (int s = n; s >= part; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

/// Largest clique through v minus one, by enumerating every clique of the
/// neighborhood with unpruned recursive extension. Exponential; meant for
/// small n.
inline int brute_force_local_dimension(const TransferGraph& g, VertexId v) {
  const auto nb = g.adjacent(v);
  const auto adjacent = [&](VertexId a, VertexId b) {
    const auto list = g.adjacent(a);
    return std::find(list.begin(), list.end(), b) != list.end();
  };
  std::size_t best = 0;
  std::vector<VertexId> clique;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    best = std::max(best, clique.size());
    for (std::size_t i = start; i < nb.size(); ++i) {
      bool ok = true;
      for (VertexId c : clique)
        if (!adjacent(c, nb[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(nb[i]);
      extend(i + 1);
      clique.pop_back();
    }
  };
  extend(0);
  return static_cast<int>(best);
}

inline int brute_force_local_dimension(const TransferGraph& g, const Partition& p) {
  return brute_force_local_dimension(g, g.index_of(p));
}

}  // namespace partgraph::oracle
