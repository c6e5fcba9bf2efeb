#pragma once

#include "mop/family.hpp"

namespace mop {

// Counting report for packing t maximal outerplanar members on n vertices.
// Two mechanisms can rule a pair (t, n) out: the raw count t(2n-3) may
// exceed C(n,2), and n may sit below the proven minimum order. The margin
// ties them together: capacity - total = quadratic/2 with
// quadratic = n^2 - (4t+1)n + 6t, so infeasible-by-counting is exactly
// quadratic < 0 for integer n >= 3.
struct BoundReport {
  int t = 0;
  int n = 0;
  long long total = 0;        // t (2n - 3)
  long long capacity = 0;     // n (n - 1) / 2
  long long quadratic = 0;    // n^2 - (4t+1) n + 6t
  int minimum_order = 0;      // min_vertices(t)
  bool counting_infeasible = false;  // total > capacity
  bool below_minimum = false;        // n < minimum_order

  bool feasible() const { return !counting_infeasible && !below_minimum; }
};

// Smallest order carrying t disjoint maximal outerplanar members: 3 when
// t = 1 (the triangle), 4t otherwise.
int min_vertices(int t);

// t >= 1, n >= 3.
BoundReport counting_check(int t, int n);

// A graph on n vertices whose edges decompose into t maximal outerplanar
// members, together with that decomposition. Built by growing the rotation
// family; the triangle covers t = 1, n = 3.
struct OptimalWitness {
  Graph graph{1};
  Family family;
};

// Requires n >= min_vertices(t). The returned graph has t(2n-3) edges, the
// most any t-member union can have.
OptimalWitness optimal_ot_graph(int t, int n);

// For n >= 8 the two-member witness has 4n-6 edges, two more than any
// graph drawable with at most one crossing per edge can carry (4n-8).
struct OnePlanarGap {
  int n = 0;
  long long union_edges = 0;    // 4n - 6
  long long one_planar_max = 0; // 4n - 8
  Graph graph{1};
  bool exceeds = false;
};

OnePlanarGap one_planar_separation(int n);

}  // namespace mop
