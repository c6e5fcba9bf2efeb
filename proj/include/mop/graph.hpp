#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mop {

// Unordered vertex pair, stored with the smaller label first.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    ZeroOrder,
    SelfLoop,
    LabelOutOfRange,
    OverlappingPairs,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Simple undirected graph on the dense label space {0, ..., n-1}.
// Neighbor lists are kept sorted; edge insertion is idempotent.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int degree(int v) const;
  int max_degree() const;

  const std::vector<int>& neighbors(int v) const;

  // All edges in canonical (u < v) lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_label(int v) const;

  int n_;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

Graph from_edges(int n, const std::vector<Edge>& edges);
Graph complete_graph(int n);

// K_n with exactly the given pairwise-disjoint pairs absent.
Graph complete_minus_matching(int n, const std::vector<Edge>& missing);

}  // namespace mop
