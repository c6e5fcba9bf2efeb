#pragma once

#include <vector>

#include "mop/graph.hpp"
#include "mop/limits.hpp"

namespace mop {

enum class SearchOutcome { Found, Refuted, BudgetExceeded };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Refuted;
  std::vector<std::vector<Edge>> parts;  // k edge classes when Found
  long long nodes = 0;                   // color assignments evaluated
};

struct SearchOptions {
  long long node_budget = 0;  // 0: MOPKIT_BUDGET or the built-in default
  bool parallel = true;
  int max_order = limits::kDecompositionMaxN;
  int max_edges = limits::kDecompositionMaxEdges;
};

// Exhaustive test for a partition of g's edges into k outerplanar classes.
//
// Deterministic by construction: edges are assigned in canonical order,
// class indices are tried ascending, and the first edge is pinned to class
// 0. The parallel path enumerates assignment prefixes serially, hands each
// prefix subtree to one task, and merges by prefix index, so the outcome
// and witness never depend on thread count or schedule. A Found witness is
// the lexicographically first decomposition in both modes; Refuted node
// counts match between modes, Found node counts are mode-specific because
// the parallel run finishes subtrees a serial run would never enter.
//
// Under a budget, the serial path charges every evaluation to one counter;
// the parallel path splits the remaining budget evenly across subtrees.
SearchResult outerthickness_exact(const Graph& g, int k, const SearchOptions& opts = {});

}  // namespace mop
