#include "mop/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mop {
namespace {

int max_clique_size(int n, const std::vector<std::uint32_t>& adj) {
  int best = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool clique = true;
    std::uint32_t rest = subset;
    while (rest != 0 && clique) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      // every other member must be a neighbor of v
      if ((subset & ~(std::uint32_t{1} << v) & ~adj[static_cast<std::size_t>(v)]) != 0) {
        clique = false;
      }
    }
    if (clique) best = size;
  }
  return best;
}

struct ColorSearch {
  int k = 0;
  const std::vector<int>* order = nullptr;
  const std::vector<std::uint32_t>* adj = nullptr;
  std::vector<int> color;  // by vertex, -1 unassigned

  bool assign(std::size_t idx, int used) {
    if (idx == order->size()) return true;
    int v = (*order)[idx];
    int limit = std::min(k, used + 1);  // at most one fresh color per branch
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      std::uint32_t nbrs = (*adj)[static_cast<std::size_t>(v)];
      while (nbrs != 0) {
        int w = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (color[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (assign(idx + 1, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

int chromatic_number_exact(const Graph& g, int max_order) {
  int n = g.order();
  if (max_order > 20) max_order = 20;  // keeps the subset clique scan cheap
  if (n > max_order) {
    throw std::invalid_argument("order " + std::to_string(n) +
                                " exceeds the exact coloring cap " +
                                std::to_string(max_order));
  }
  if (g.edge_count() == 0) return 1;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }

  // High-degree vertices first makes conflicts surface early.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  for (int k = max_clique_size(n, adj); k <= n; ++k) {
    ColorSearch search;
    search.k = k;
    search.order = &order;
    search.adj = &adj;
    search.color.assign(static_cast<std::size_t>(n), -1);
    if (search.assign(0, 0)) return k;
  }
  return n;  // unreachable: n colors always suffice
}

}  // namespace mop
