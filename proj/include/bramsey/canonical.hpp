#pragma once

#include <string>

#include "bramsey/bigraph.hpp"

namespace bramsey {

inline constexpr int max_canonical_side = 24;

// Exact canonical form under independent row and column permutations: two
// graphs get equal keys iff one can be mapped onto the other by permuting
// rows and permuting columns.  Defined for m, n <= 24; throws beyond that.
//
// The key is the lexicographically least row-major bit matrix over all such
// permutations, found by emitting rows one at a time: the ordered partition
// of columns is refined by each emitted row (zeros before ones inside every
// cell), the next row is any remaining row whose cheapest arrangement is
// minimal, and ties branch.  Degree refinement falls out of the first split;
// the backtracking only walks residual permutation cells.
auto canonical_key(const BiGraph& g) -> std::string;

} // namespace bramsey
