#include "mop/bounds.hpp"

#include <string>

#include "mop/extend.hpp"
#include "mop/rotation.hpp"

namespace mop {

int min_vertices(int t) {
  if (t < 1) throw std::invalid_argument("member count must be positive, got " + std::to_string(t));
  return t == 1 ? 3 : 4 * t;
}

BoundReport counting_check(int t, int n) {
  if (t < 1) throw std::invalid_argument("member count must be positive, got " + std::to_string(t));
  if (n < 3) throw std::invalid_argument("order must be at least 3, got " + std::to_string(n));
  BoundReport r;
  r.t = t;
  r.n = n;
  long long ln = n, lt = t;
  r.total = lt * (2 * ln - 3);
  r.capacity = ln * (ln - 1) / 2;
  r.quadratic = ln * ln - (4 * lt + 1) * ln + 6 * lt;
  r.minimum_order = min_vertices(t);
  r.counting_infeasible = r.total > r.capacity;
  r.below_minimum = n < r.minimum_order;
  return r;
}

OptimalWitness optimal_ot_graph(int t, int n) {
  int least = min_vertices(t);
  if (n < least) {
    throw std::invalid_argument("order " + std::to_string(n) + " below the minimum " +
                                std::to_string(least) + " for " + std::to_string(t) + " members");
  }
  OptimalWitness w;
  if (t == 1 && n == 3) {
    Graph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    Member m;
    m.edges = triangle.edges();
    w.family.n = 3;
    w.family.members.push_back(std::move(m));
    w.graph = std::move(triangle);
    return w;
  }
  w.family = extend_to(rotation_family(t), n);
  w.graph = family_union(w.family);
  return w;
}

OnePlanarGap one_planar_separation(int n) {
  if (n < 8) throw std::invalid_argument("order must be at least 8, got " + std::to_string(n));
  OnePlanarGap gap;
  gap.n = n;
  OptimalWitness w = optimal_ot_graph(2, n);
  gap.graph = std::move(w.graph);
  gap.union_edges = static_cast<long long>(gap.graph.edge_count());
  gap.one_planar_max = 4LL * n - 8;
  gap.exceeds = gap.union_edges > gap.one_planar_max;
  return gap;
}

}  // namespace mop
