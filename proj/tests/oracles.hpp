// Test-only reference implementations, deliberately independent of the
// library's algorithms: outerplanarity via forbidden-subdivision search,
// a Hamiltonian cycle counter, a second graph6 decoder, and seeded random
// graph generators.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mop/graph.hpp"

namespace testkit {

using mop::Edge;
using mop::Graph;

namespace detail {

// Embeds pattern edges as internally-disjoint paths between fixed branch
// vertices. `used` blocks internal vertices; branch vertices may only serve
// as endpoints.
inline bool embed_paths(const Graph& g, const std::vector<std::pair<int, int>>& want,
                        std::size_t idx, std::vector<bool>& used,
                        const std::vector<bool>& is_branch) {
  if (idx == want.size()) return true;
  auto [s, t] = want[idx];
  std::function<bool(int)> dfs = [&](int v) -> bool {
    for (int w : g.neighbors(v)) {
      if (w == t) {
        if (embed_paths(g, want, idx + 1, used, is_branch)) return true;
        continue;
      }
      if (used[static_cast<std::size_t>(w)] || is_branch[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      if (dfs(w)) return true;
      used[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  return dfs(s);
}

}  // namespace detail

inline bool has_k4_subdivision(const Graph& g) {
  int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    for (int b = a + 1; b < n; ++b) {
      if (g.degree(b) < 3) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.degree(c) < 3) continue;
        for (int d = c + 1; d < n; ++d) {
          if (g.degree(d) < 3) continue;
          std::vector<bool> is_branch(static_cast<std::size_t>(n), false);
          is_branch[static_cast<std::size_t>(a)] = is_branch[static_cast<std::size_t>(b)] = true;
          is_branch[static_cast<std::size_t>(c)] = is_branch[static_cast<std::size_t>(d)] = true;
          std::vector<std::pair<int, int>> want = {{a, b}, {a, c}, {a, d},
                                                   {b, c}, {b, d}, {c, d}};
          std::vector<bool> used(static_cast<std::size_t>(n), false);
          if (detail::embed_paths(g, want, 0, used, is_branch)) return true;
        }
      }
    }
  }
  return false;
}

inline bool has_k23_subdivision(const Graph& g) {
  int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) < 3) continue;
    for (int y = x + 1; y < n; ++y) {
      if (g.degree(y) < 3) continue;
      std::vector<int> rest;
      for (int v = 0; v < n; ++v) {
        if (v != x && v != y && g.degree(v) >= 2) rest.push_back(v);
      }
      for (std::size_t p = 0; p < rest.size(); ++p) {
        for (std::size_t q = p + 1; q < rest.size(); ++q) {
          for (std::size_t r = q + 1; r < rest.size(); ++r) {
            std::vector<bool> is_branch(static_cast<std::size_t>(n), false);
            for (int v : {x, y, rest[p], rest[q], rest[r]}) {
              is_branch[static_cast<std::size_t>(v)] = true;
            }
            std::vector<std::pair<int, int>> want = {{x, rest[p]}, {x, rest[q]}, {x, rest[r]},
                                                     {y, rest[p]}, {y, rest[q]}, {y, rest[r]}};
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            if (detail::embed_paths(g, want, 0, used, is_branch)) return true;
          }
        }
      }
    }
  }
  return false;
}

// A graph is outerplanar exactly when it carries no subdivision of K_4 and
// none of K_{2,3}; both patterns have max degree 3, so subdivisions and
// minors coincide here.
inline bool outerplanar_by_subdivision(const Graph& g) {
  return !has_k4_subdivision(g) && !has_k23_subdivision(g);
}

// Number of distinct Hamiltonian cycles (undirected, rotations identified).
inline long long count_hamiltonian_cycles(const Graph& g) {
  int n = g.order();
  if (n < 3) return 0;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  long long directed = 0;
  std::function<void(int, int)> dfs = [&](int v, int depth) {
    if (depth == n) {
      if (g.has_edge(v, 0)) ++directed;
      return;
    }
    for (int w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      dfs(w, depth + 1);
      seen[static_cast<std::size_t>(w)] = false;
    }
  };
  dfs(0, 1);
  return directed / 2;  // each cycle walks both directions
}

// graph6 decoder in a different style from the library's: expand the whole
// bit string first, then read the column-major triangle.
inline Graph decode_graph6_reference(const std::string& s) {
  int n = static_cast<int>(static_cast<unsigned char>(s.at(0))) - 63;
  std::vector<int> bits;
  for (std::size_t idx = 1; idx < s.size(); ++idx) {
    int c = static_cast<unsigned char>(s[idx]) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  Graph g(n);
  std::size_t at = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++at) {
      if (bits.at(at) != 0) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Random polygon triangulation under a random relabeling: a maximal
// outerplanar graph whatever the library thinks maximal outerplanar means.
inline Graph random_mop(int n, std::mt19937& rng) {
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
  std::shuffle(label.begin(), label.end(), rng);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>((i + 1) % n)]);
  }
  std::function<void(int, int)> split = [&](int lo, int hi) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
    int k = pick(rng);
    if (k - lo > 1) g.add_edge(label[static_cast<std::size_t>(lo)], label[static_cast<std::size_t>(k)]);
    if (hi - k > 1) g.add_edge(label[static_cast<std::size_t>(k)], label[static_cast<std::size_t>(hi)]);
    split(lo, k);
    split(k, hi);
  };
  split(0, n - 1);
  return g;
}

}  // namespace testkit
