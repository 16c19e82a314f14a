#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "partgraph/bitset.hpp"

namespace partgraph {

/// Exact maximum clique of a small dense graph given as bitset rows.
///
/// Branch and bound in the style of Tomita's MCQ/MCR: candidates are
/// greedily colored in a fixed vertex order and expanded from the highest
/// color class down; a branch is cut as soon as the current clique plus
/// the color bound cannot beat the incumbent. The fixed order is a
/// degeneracy order (vertices of the densest core colored first).
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(std::span<const Bitset> adjacency) : adj_(adjacency.begin(), adjacency.end()) {
    order_ = degeneracy_order();
    // Re-index so that bit i means the i-th vertex of the order; coloring
    // then walks candidates with a plain bit scan.
    const std::size_t k = adj_.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[order_[i]] = i;
    std::vector<Bitset> permuted(k, Bitset(k));
    for (std::size_t v = 0; v < k; ++v) adj_[v].for_each([&](std::size_t w) { permuted[pos[v]].set(pos[w]); });
    adj_ = std::move(permuted);
  }

  /// Size of a maximum clique; 0 for the empty graph.
  std::size_t solve() {
    best_.clear();
    current_.clear();
    if (adj_.empty()) return 0;
    Bitset all(adj_.size());
    all.set_all();
    expand(all);
    return best_.size();
  }

  /// Vertices (original numbering) of the maximum clique found by solve().
  std::vector<std::size_t> witness() const {
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Repeatedly remove a minimum-degree vertex; the reverse removal order
  // puts high-core vertices first.
  std::vector<std::size_t> degeneracy_order() const {
    const std::size_t k = adj_.size();
    std::vector<std::size_t> deg(k);
    for (std::size_t v = 0; v < k; ++v) deg[v] = adj_[v].count();
    std::vector<bool> removed(k, false);
    std::vector<std::size_t> removal;
    removal.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
      std::size_t pick = k;
      for (std::size_t v = 0; v < k; ++v)
        if (!removed[v] && (pick == k || deg[v] < deg[pick])) pick = v;
      removed[pick] = true;
      removal.push_back(pick);
      adj_[pick].for_each([&](std::size_t w) {
        if (!removed[w]) --deg[w];
      });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
  }

  // Greedy sequential coloring of `cand`; fills vertices in nondecreasing
  // color order together with each vertex's color (1-based).
  void color_sort(const Bitset& cand, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    verts.clear();
    colors.clear();
    Bitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
        q.subtract(adj_[v]);
        uncolored.reset(v);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(Bitset cand) {
    std::vector<std::size_t> verts;
    std::vector<std::size_t> colors;
    color_sort(cand, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      current_.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.any()) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

inline std::size_t max_clique_size(std::span<const Bitset> adjacency) {
  return MaxCliqueSolver(adjacency).solve();
}

}  // namespace partgraph
