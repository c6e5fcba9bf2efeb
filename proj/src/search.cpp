#include "mop/search.hpp"

#include <algorithm>
#include <string>

#include "mop/outerplanar.hpp"

namespace mop {
namespace {

constexpr int kPrefixDepth = 6;

// One depth-first scan assigning edges[i..] to classes, given class masks
// already loaded with edges[0..i). `colors` carries the full assignment.
struct Dfs {
  int n = 0;
  int k = 0;
  const std::vector<Edge>* edges = nullptr;
  std::vector<std::vector<std::uint64_t>> cls;
  std::vector<int>* colors = nullptr;
  long long nodes = 0;
  long long budget = 0;
  bool exceeded = false;
  int stop_depth = -1;                 // callback depth for prefix splitting
  std::vector<std::vector<int>>* prefixes = nullptr;

  bool class_ok(int c) { return detail::outerplanar_masks(n, cls[static_cast<std::size_t>(c)]); }

  void add(int c, const Edge& e) {
    cls[static_cast<std::size_t>(c)][static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    cls[static_cast<std::size_t>(c)][static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  void remove(int c, const Edge& e) {
    cls[static_cast<std::size_t>(c)][static_cast<std::size_t>(e.u)] &= ~(std::uint64_t{1} << e.v);
    cls[static_cast<std::size_t>(c)][static_cast<std::size_t>(e.v)] &= ~(std::uint64_t{1} << e.u);
  }

  bool run(int i) {
    if (exceeded) return false;
    if (i == static_cast<int>(edges->size())) return true;
    if (i == stop_depth) {
      prefixes->push_back(*colors);  // colors[0..i) is a viable prefix
      return false;
    }
    const Edge& e = (*edges)[static_cast<std::size_t>(i)];
    int limit = (i == 0) ? 1 : k;  // pin the first edge to class 0
    for (int c = 0; c < limit; ++c) {
      ++nodes;
      if (nodes > budget) {
        exceeded = true;
        return false;
      }
      add(c, e);
      (*colors)[static_cast<std::size_t>(i)] = c;
      if (class_ok(c) && run(i + 1)) return true;
      remove(c, e);
      if (exceeded) return false;
    }
    return false;
  }
};

std::vector<std::vector<Edge>> parts_from_colors(const std::vector<Edge>& edges,
                                                 const std::vector<int>& colors, int k) {
  std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    parts[static_cast<std::size_t>(colors[i])].push_back(edges[i]);
  }
  return parts;
}

SearchResult search_serial(const Graph& g, int k, const std::vector<Edge>& edges,
                           long long budget) {
  std::vector<int> colors(edges.size(), -1);
  Dfs dfs;
  dfs.n = g.order();
  dfs.k = k;
  dfs.edges = &edges;
  dfs.cls.assign(static_cast<std::size_t>(k),
                 std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0));
  dfs.colors = &colors;
  dfs.budget = budget;

  SearchResult result;
  bool found = dfs.run(0);
  result.nodes = dfs.nodes;
  if (found) {
    result.outcome = SearchOutcome::Found;
    result.parts = parts_from_colors(edges, colors, k);
  } else {
    result.outcome = dfs.exceeded ? SearchOutcome::BudgetExceeded : SearchOutcome::Refuted;
  }
  return result;
}

SearchResult search_parallel(const Graph& g, int k, const std::vector<Edge>& edges,
                             long long budget) {
  // Enumerate viable prefixes serially; the enumeration is itself a
  // depth-capped version of the serial scan, so its node charges line up
  // with the serial reference.
  std::vector<std::vector<int>> prefixes;
  std::vector<int> colors(edges.size(), -1);
  Dfs enumerate;
  enumerate.n = g.order();
  enumerate.k = k;
  enumerate.edges = &edges;
  enumerate.cls.assign(static_cast<std::size_t>(k),
                       std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0));
  enumerate.colors = &colors;
  enumerate.budget = budget;
  enumerate.stop_depth = kPrefixDepth;
  enumerate.prefixes = &prefixes;
  enumerate.run(0);

  SearchResult result;
  result.nodes = enumerate.nodes;
  if (enumerate.exceeded) {
    result.outcome = SearchOutcome::BudgetExceeded;
    return result;
  }
  if (prefixes.empty()) {
    result.outcome = SearchOutcome::Refuted;
    return result;
  }

  long long remaining = budget - enumerate.nodes;
  long long per_subtree =
      std::max<long long>(1, remaining / static_cast<long long>(prefixes.size()));

  struct SubResult {
    bool found = false;
    bool exceeded = false;
    long long nodes = 0;
    std::vector<int> colors;
  };
  std::vector<SubResult> subs(prefixes.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long p = 0; p < static_cast<long long>(prefixes.size()); ++p) {
    std::vector<int> local = prefixes[static_cast<std::size_t>(p)];
    Dfs dfs;
    dfs.n = g.order();
    dfs.k = k;
    dfs.edges = &edges;
    dfs.cls.assign(static_cast<std::size_t>(k),
                   std::vector<std::uint64_t>(static_cast<std::size_t>(g.order()), 0));
    dfs.colors = &local;
    dfs.budget = per_subtree;
    for (int i = 0; i < kPrefixDepth; ++i) {
      dfs.add(local[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(i)]);
    }
    bool found = dfs.run(kPrefixDepth);
    subs[static_cast<std::size_t>(p)] = SubResult{found, dfs.exceeded, dfs.nodes, std::move(local)};
  }

  // Merge in prefix order: the first subtree with a hit carries the
  // lexicographically first decomposition overall.
  const SubResult* hit = nullptr;
  bool any_exceeded = false;
  for (const SubResult& sub : subs) {
    result.nodes += sub.nodes;
    any_exceeded = any_exceeded || sub.exceeded;
    if (hit == nullptr && sub.found) hit = &sub;
  }
  if (hit != nullptr) {
    result.outcome = SearchOutcome::Found;
    result.parts = parts_from_colors(edges, hit->colors, k);
  } else {
    result.outcome = any_exceeded ? SearchOutcome::BudgetExceeded : SearchOutcome::Refuted;
  }
  return result;
}

}  // namespace

SearchResult outerthickness_exact(const Graph& g, int k, const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("class count must be positive");
  if (g.order() > opts.max_order) {
    throw std::invalid_argument("order " + std::to_string(g.order()) +
                                " exceeds the decomposition search cap " +
                                std::to_string(opts.max_order));
  }
  std::vector<Edge> edges = g.edges();
  if (static_cast<int>(edges.size()) > opts.max_edges) {
    throw std::invalid_argument("edge count " + std::to_string(edges.size()) +
                                " exceeds the decomposition search cap " +
                                std::to_string(opts.max_edges));
  }
  long long budget = opts.node_budget > 0 ? opts.node_budget : limits::node_budget_from_env();
  if (!opts.parallel || static_cast<int>(edges.size()) <= kPrefixDepth) {
    return search_serial(g, k, edges, budget);
  }
  return search_parallel(g, k, edges, budget);
}

}  // namespace mop
