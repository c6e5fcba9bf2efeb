#pragma once

#include "mop/family.hpp"
#include "mop/search.hpp"

namespace mop {

// Fixed 7- and 8-vertex exhibits used by the boundary and coloring checks.

// Two-member split of K_7 minus the edge {0,4}: member 0 is maximal
// outerplanar (11 edges), member 1 is outerplanar but three edges short of
// maximal. Self-checks the union on construction.
Family k7_minus_e_family();

// The missing edge above.
Edge k7_missing_edge();

// The two-member family whose union is K_8 minus the matching {2,6},{3,7}
// (the level-1 doubling family).
Family k8_minus_matching_family();

// Exhaustive evidence that K_7 minus an edge sits at the boundary: it
// splits into two outerplanar parts while K_7 itself does not, so adding
// the missing edge pushes the decomposition number up, yet its 20 edges
// fall short of the 22 a two-member union could carry.
struct BoundaryVerdict {
  SearchResult without_edge;  // K_7 - e, k = 2
  SearchResult with_edge;     // K_7, k = 2
  bool maximal = false;       // found for K_7 - e, refuted for K_7
  bool optimal = false;       // 20 == 22 would be required; stays false
};

BoundaryVerdict k7e_boundary_verdict(const SearchOptions& opts = {});

}  // namespace mop
