#pragma once

#include "mop/family.hpp"

namespace mop {

// Rotation construction: t edge-disjoint maximal outerplanar members on 4t
// vertices. Member 0 is a fixed fan-and-square triangulation whose outer
// cycle threads four apex vertices {0, t, 2t, 3t}; member i is member 0
// with all labels shifted by +i (mod 4t) plus the long diagonal {i, i+2t}.

// The base triangulation without its diagonal: 8t-4 edges.
Graph rotation_base(int t);

// Outer cycle of rotation_base(t) starting at apex 0.
std::vector<int> rotation_base_cycle(int t);

// Member i: shifted base plus the diagonal, 8t-3 edges. 0 <= i < t.
Graph rotation_graph(int t, int i);

// The full family. Self-checks before returning: every member certifies as
// maximal outerplanar, members are pairwise edge-disjoint, and the union is
// K_{4t} minus the matching {{i, i+2t} : t <= i < 2t}; a violation throws
// std::logic_error.
Family rotation_family(int t);

// The matching missing from the family union.
std::vector<Edge> rotation_missing_matching(int t);

}  // namespace mop
