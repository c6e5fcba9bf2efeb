#pragma once

#include "mop/graph.hpp"
#include "mop/limits.hpp"

namespace mop {

// Exact chromatic number by branch and bound: the largest clique (found
// exhaustively, the order cap keeps that cheap) lower-bounds the answer,
// then k-colorability is tested for ascending k with at most one fresh
// color offered per branch. Throws std::invalid_argument above max_order.
int chromatic_number_exact(const Graph& g, int max_order = limits::kChromaticMaxN);

}  // namespace mop
