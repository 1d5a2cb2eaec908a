#pragma once

#include <span>

#include "aztec/dualgraph.hpp"
#include "aztec/geometry.hpp"
#include "aztec/numeric.hpp"

namespace aztec {

// Weighted sum over perfect matchings by branching on the lowest unmatched
// vertex, with connected-component factorization and memoization on the set
// of remaining vertices. Edge weights are honoured; for unit weights the
// result is an integer.
Rational count_matchings_brute(const DualGraph& graph);

// As count_matchings_brute, but rejects nonpositive weights.
Rational count_matchings_weighted(const DualGraph& graph);

// Transfer-matrix count of domino tilings of an arbitrary cell set. Sweeps
// diagonal columns (constant u or constant v, whichever is shorter); the
// state is the set of cells in the current column already covered from the
// left. Columns are limited to 64 cells.
Integer count_tilings_dp(std::span<const Cell> cells);
Integer count_tilings_dp(const Region& region);

enum class Engine { kDp, kBrute };

// Matching count of a lattice dual graph with the chosen engine. Weighted
// graphs always go through the brute-force counter.
Rational count_matchings(const DualGraph& graph, Engine engine);

}  // namespace aztec
