#include "mop/gallery.hpp"

#include <algorithm>

#include "mop/certify.hpp"
#include "mop/doubling.hpp"
#include "mop/outerplanar.hpp"

namespace mop {

Edge k7_missing_edge() { return Edge(0, 4); }

Family k7_minus_e_family() {
  Family f;
  f.n = 7;
  Member a;
  a.edges = {{0, 1}, {0, 2}, {0, 6}, {1, 2}, {2, 6}, {2, 5},
             {2, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  Member b;
  b.edges = {{0, 3}, {3, 6}, {1, 3}, {3, 5}, {4, 6}, {1, 6}, {1, 4}, {1, 5}, {0, 5}};
  std::sort(a.edges.begin(), a.edges.end());
  std::sort(b.edges.begin(), b.edges.end());
  f.members.push_back(std::move(a));
  f.members.push_back(std::move(b));

  if (!certify_mop(f.member_graph(0)).ok() || !is_outerplanar_small(f.member_graph(1)) ||
      find_collision(f).has_value()) {
    throw std::logic_error("seven-vertex exhibit is corrupt");
  }
  Graph expected = complete_minus_matching(7, {k7_missing_edge()});
  if (!(family_union(f) == expected)) {
    throw std::logic_error("seven-vertex exhibit union is not K_7 minus {0,4}");
  }
  return f;
}

Family k8_minus_matching_family() { return doubling_family(1); }

BoundaryVerdict k7e_boundary_verdict(const SearchOptions& opts) {
  BoundaryVerdict verdict;
  Graph k7e = complete_minus_matching(7, {k7_missing_edge()});
  Graph k7 = complete_graph(7);
  verdict.without_edge = outerthickness_exact(k7e, 2, opts);
  verdict.with_edge = outerthickness_exact(k7, 2, opts);
  verdict.maximal = verdict.without_edge.outcome == SearchOutcome::Found &&
                    verdict.with_edge.outcome == SearchOutcome::Refuted;
  long long best_two_member = 2 * (2LL * 7 - 3);
  verdict.optimal = verdict.maximal &&
                    static_cast<long long>(k7e.edge_count()) == best_two_member;
  return verdict;
}

}  // namespace mop
