#include "mop/family.hpp"

#include <algorithm>
#include <string>

namespace mop {

Graph Family::member_graph(int k) const {
  if (k < 0 || k >= t()) {
    throw std::out_of_range("member index " + std::to_string(k) +
                            " outside {0,...," + std::to_string(t() - 1) + "}");
  }
  return from_edges(n, members[static_cast<std::size_t>(k)].edges);
}

void Family::validate() const {
  if (n < 1) {
    throw GraphError(GraphError::Kind::ZeroOrder,
                     "family over an empty vertex set");
  }
  for (int k = 0; k < t(); ++k) {
    const auto& es = members[static_cast<std::size_t>(k)].edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const Edge& e = es[i];
      if (e.u == e.v) {
        throw GraphError(GraphError::Kind::SelfLoop,
                         "member " + std::to_string(k) + " holds a self-loop");
      }
      if (e.u < 0 || e.v >= n) {
        throw GraphError(GraphError::Kind::LabelOutOfRange,
                         "member " + std::to_string(k) +
                             " holds a label outside the vertex range");
      }
      if (i > 0 && !(es[i - 1] < e)) {
        throw GraphError(GraphError::Kind::OverlappingPairs,
                         "member " + std::to_string(k) +
                             " edges not in strict canonical order");
      }
    }
  }
}

std::optional<EdgeCollision> find_collision(const Family& f) {
  for (int i = 0; i < f.t(); ++i) {
    const auto& a = f.members[static_cast<std::size_t>(i)].edges;
    for (int j = i + 1; j < f.t(); ++j) {
      const auto& b = f.members[static_cast<std::size_t>(j)].edges;
      // Both lists are sorted, so the first shared edge is found by merging.
      std::size_t p = 0, q = 0;
      while (p < a.size() && q < b.size()) {
        if (a[p] < b[q]) {
          ++p;
        } else if (b[q] < a[p]) {
          ++q;
        } else {
          return EdgeCollision{i, j, a[p]};
        }
      }
    }
  }
  return std::nullopt;
}

bool edges_disjoint(const Family& f) { return !find_collision(f).has_value(); }

Graph family_union(const Family& f) {
  Graph g(f.n);
  for (const Member& m : f.members) {
    for (const Edge& e : m.edges) g.add_edge(e.u, e.v);
  }
  return g;
}

}  // namespace mop
