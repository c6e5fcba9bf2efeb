#pragma once

#include "mop/family.hpp"
#include "mop/limits.hpp"

namespace mop {

// Label-doubling construction: level s holds 2^s edge-disjoint maximal
// outerplanar members on 2^{s+2} vertices. Every member's outer cycle is
// the arithmetic progression 0, d, 2d, ... (mod n) for an odd step d; one
// round of doubling maps each member to two members on twice the vertices.

struct StarMember {
  Graph graph{1};
  int step = 1;  // odd; witnesses the arithmetic outer cycle
  int index = 0; // position within its level
};

enum class DoublingVariant { Even, Odd };

// True when every pair {j*step, (j+1)*step} (mod order) is an edge. For a
// certified maximal outerplanar graph this pins the outer cycle itself,
// since the outer cycle is the unique Hamiltonian cycle.
bool has_step_cycle(const Graph& g, int step);

// One doubling round. Even relabels v -> 2v and keeps the step; Odd
// relabels v -> 2v+1 and moves the step to d + n (n the input order). Both
// stitch one new vertex into every outer-cycle edge. Throws
// std::invalid_argument when the input lacks the arithmetic outer cycle.
StarMember double_member(const StarMember& m, DoublingVariant variant);

// Level 0: the single 4-vertex member with edges {01,12,23,03,02}, step 1.
Family base_family();

// Level s, members ordered by index: the even child of member k keeps
// index k, the odd child lands at 2^s + k. Self-checks like
// rotation_family does; throws std::invalid_argument above max_level.
Family doubling_family(int s, int max_level = limits::kDoublingMaxLevel);

// K_{2^{s+2}} minus the matching {{i, i+2^{s+1}} : 2^s <= i < 2^{s+1}}.
Graph doubling_target(int s);

// The steps realized by the members' outer cycles, read off the family
// metadata but re-verified against the edges, cover every odd residue
// mod n once, counting d and n-d together.
bool covers_odd_steps(const Family& f);

// Every long diagonal {i, i+n/2} outside the removed matching, that is for
// 0 <= i < n/4, appears in some member.
bool covers_middle_edges(const Family& f);

}  // namespace mop
