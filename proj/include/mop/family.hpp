#pragma once

#include <optional>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

// One edge set of a family. `step` records the outer-cycle step d of the
// label-doubling construction (the outer cycle is 0, d, 2d, ... mod n);
// it is absent for members produced any other way.
struct Member {
  std::vector<Edge> edges;
  std::optional<int> step;

  bool operator==(const Member&) const = default;
};

// An ordered list of edge sets over the shared vertex set {0, ..., n-1}.
struct Family {
  int n = 0;
  std::vector<Member> members;

  int t() const { return static_cast<int>(members.size()); }
  Graph member_graph(int k) const;

  // Throws GraphError if any member holds an out-of-range label, a
  // self-loop, a duplicate pair, or edges out of canonical order.
  void validate() const;

  bool operator==(const Family&) const = default;
};

struct EdgeCollision {
  int first_member = 0;
  int second_member = 0;
  Edge edge;
};

// Lexicographically smallest (i, j, edge) shared by two members, or empty
// when the members are pairwise edge-disjoint.
std::optional<EdgeCollision> find_collision(const Family& f);
bool edges_disjoint(const Family& f);

Graph family_union(const Family& f);

}  // namespace mop
