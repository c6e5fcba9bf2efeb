#include "mop/outerplanar.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace mop {

namespace detail {
namespace {

// Searches for a circular order of one biconnected block in which
// consecutive vertices are adjacent and all remaining edges nest without
// crossing; that is exactly an outerplanar embedding of the block.
struct LayoutSearch {
  int k = 0;
  const std::vector<std::uint64_t>* adj = nullptr;
  std::vector<int> order;
  std::vector<std::pair<int, int>> spans;  // chord position pairs, lo < hi
  std::uint64_t used = 0;

  bool crosses_existing(int lo, int hi) const {
    for (auto [a, b] : spans) {
      if ((a < lo && lo < b && b < hi) || (lo < a && a < hi && hi < b)) return true;
    }
    return false;
  }

  bool place(int i) {
    if (i == k) return true;
    int prev = order[static_cast<std::size_t>(i - 1)];
    bool last = (i == k - 1);
    std::uint64_t cands = (*adj)[static_cast<std::size_t>(prev)] & ~used;
    while (cands != 0) {
      int v = std::countr_zero(cands);
      cands &= cands - 1;
      // The cycle must close back to the start vertex (local label 0).
      if (last && (((*adj)[static_cast<std::size_t>(v)] & 1u) == 0)) continue;
      std::size_t saved = spans.size();
      bool ok = true;
      for (int p = last ? 1 : 0; p <= i - 2 && ok; ++p) {
        int w = order[static_cast<std::size_t>(p)];
        if ((((*adj)[static_cast<std::size_t>(v)] >> w) & 1u) == 0) continue;
        if (crosses_existing(p, i)) {
          ok = false;
        } else {
          spans.emplace_back(p, i);
        }
      }
      if (ok) {
        order[static_cast<std::size_t>(i)] = v;
        used |= std::uint64_t{1} << v;
        if (place(i + 1)) return true;
        used &= ~(std::uint64_t{1} << v);
      }
      spans.resize(saved);
    }
    return false;
  }

  bool run() {
    order.assign(static_cast<std::size_t>(k), 0);
    used = 1;  // vertex 0 pinned to position 0
    return place(1);
  }
};

bool block_outerplanar(const std::vector<std::pair<int, int>>& block_edges) {
  // Relabel the block's vertices to 0..k-1 in ascending original order.
  std::vector<int> verts;
  for (auto [u, v] : block_edges) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  int k = static_cast<int>(verts.size());
  if (k <= 2) return true;
  if (block_edges.size() > static_cast<std::size_t>(2 * k - 3)) return false;

  std::vector<std::uint64_t> local(static_cast<std::size_t>(k), 0);
  auto local_id = [&](int v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (auto [u, v] : block_edges) {
    int a = local_id(u), b = local_id(v);
    local[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    local[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  }
  LayoutSearch search;
  search.k = k;
  search.adj = &local;
  return search.run();
}

// Standard biconnected-component split via DFS low points and an edge stack.
struct BlockFinder {
  int n = 0;
  const std::vector<std::uint64_t>* adj = nullptr;
  std::vector<int> num, low;
  int timer = 0;
  std::vector<std::pair<int, int>> estack;
  bool all_blocks_outerplanar = true;

  void dfs(int u, int parent) {
    num[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
    std::uint64_t nbrs = (*adj)[static_cast<std::size_t>(u)];
    while (nbrs != 0 && all_blocks_outerplanar) {
      int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (v == parent) continue;
      if (num[static_cast<std::size_t>(v)] == 0) {
        estack.emplace_back(u, v);
        dfs(v, u);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= num[static_cast<std::size_t>(u)]) {
          std::vector<std::pair<int, int>> block;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e.first == u && e.second == v) break;
          }
          if (!block_outerplanar(block)) all_blocks_outerplanar = false;
        }
      } else if (num[static_cast<std::size_t>(v)] < num[static_cast<std::size_t>(u)]) {
        estack.emplace_back(u, v);
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], num[static_cast<std::size_t>(v)]);
      }
    }
  }

  bool run() {
    num.assign(static_cast<std::size_t>(n), 0);
    low.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n && all_blocks_outerplanar; ++v) {
      if (num[static_cast<std::size_t>(v)] == 0) dfs(v, -1);
    }
    return all_blocks_outerplanar;
  }
};

}  // namespace

bool outerplanar_masks(int n, const std::vector<std::uint64_t>& adj) {
  int m2 = 0;
  for (int v = 0; v < n; ++v) m2 += std::popcount(adj[static_cast<std::size_t>(v)]);
  if (n >= 2 && m2 > 2 * (2 * n - 3)) return false;
  BlockFinder finder;
  finder.n = n;
  finder.adj = &adj;
  return finder.run();
}

}  // namespace detail

bool is_outerplanar_small(const Graph& g, int max_n) {
  if (max_n > 64) max_n = 64;
  if (g.order() > max_n) {
    throw std::invalid_argument("order " + std::to_string(g.order()) +
                                " exceeds the outerplanarity oracle cap " +
                                std::to_string(max_n));
  }
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return detail::outerplanar_masks(g.order(), adj);
}

}  // namespace mop
