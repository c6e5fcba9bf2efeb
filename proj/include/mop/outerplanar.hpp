#pragma once

#include <cstdint>
#include <vector>

#include "mop/graph.hpp"
#include "mop/limits.hpp"

namespace mop {

// Exhaustive outerplanarity test, independent of the certificate machinery:
// decomposes into biconnected blocks and searches each block for a circular
// vertex order whose non-consecutive edges nest without crossing. Intended
// for desk-scale cross-validation; throws std::invalid_argument above max_n.
bool is_outerplanar_small(const Graph& g, int max_n = limits::kOuterplanarOracleMaxN);

namespace detail {

// Same test on a bitmask adjacency (row v = mask of v's neighbors), used by
// the decomposition search where graphs live as masks already. n <= 64.
bool outerplanar_masks(int n, const std::vector<std::uint64_t>& adj);

}  // namespace detail

}  // namespace mop
