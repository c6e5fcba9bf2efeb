#include "mop/graph.hpp"

#include <algorithm>

namespace mop {

Graph::Graph(int n) : n_(n) {
  if (n < 1) {
    throw GraphError(GraphError::Kind::ZeroOrder,
                     "graph order must be at least 1, got " + std::to_string(n));
  }
  adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_label(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError(GraphError::Kind::LabelOutOfRange,
                     "vertex label " + std::to_string(v) +
                         " outside {0,...," + std::to_string(n_ - 1) + "}");
  }
}

void Graph::add_edge(int u, int v) {
  check_label(u);
  check_label(v);
  if (u == v) {
    throw GraphError(GraphError::Kind::SelfLoop,
                     "self-loop at vertex " + std::to_string(u));
  }
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_label(u);
  check_label(v);
  if (u == v) return false;
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::degree(int v) const {
  check_label(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adj_) best = std::max(best, nb.size());
  return static_cast<int>(best);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_label(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_minus_matching(int n, const std::vector<Edge>& missing) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const Edge& e : missing) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError(GraphError::Kind::LabelOutOfRange,
                       "matching pair outside the vertex range");
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::SelfLoop,
                       "matching pair with equal endpoints");
    }
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) {
      throw GraphError(GraphError::Kind::OverlappingPairs,
                       "matching pairs share a vertex");
    }
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
  }
  Graph g = complete_graph(n);
  Graph out(n);
  for (const Edge& e : g.edges()) {
    bool skip = false;
    for (const Edge& miss : missing) {
      if (e == miss) {
        skip = true;
        break;
      }
    }
    if (!skip) out.add_edge(e.u, e.v);
  }
  return out;
}

}  // namespace mop
