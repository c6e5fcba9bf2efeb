#pragma once

namespace mop::limits {

// Hard caps for the exhaustive routines. They keep accidental big inputs
// from wedging a terminal session; each caller may widen them explicitly.
inline constexpr int kOuterplanarOracleMaxN = 32;
inline constexpr int kDecompositionMaxN = 10;
inline constexpr int kDecompositionMaxEdges = 28;
inline constexpr int kChromaticMaxN = 12;
inline constexpr int kDoublingMaxLevel = 7;

inline constexpr long long kDefaultNodeBudget = 200'000'000;

// Node budget for decomposition search: MOPKIT_BUDGET when set to a positive
// integer, kDefaultNodeBudget otherwise.
long long node_budget_from_env();

}  // namespace mop::limits
