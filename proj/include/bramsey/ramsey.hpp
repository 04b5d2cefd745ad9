#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bramsey/bigraph.hpp"

// Bipartite Ramsey search: does some t-coloring of the cells of K_{b,b}
// avoid a monochromatic K_{n_i,n_i} in every color i?  B(n_1,...,n_t) is the
// least b for which the answer turns negative; it stays negative from there
// on, since restricting a good coloring of a larger board gives a good
// coloring of the smaller one.

namespace bramsey {

struct RamseyInstance {
    int b = 1;
    std::vector<int> sizes;   // forbidden diagonal biclique order per color
};

struct SearchConfig {
    long long budget = 100'000'000;   // attempted cell assignments
    int workers = 1;
    bool symmetry = true;
    bool deterministic = true;   // resolve witness races by branch order
};

// exhausted is a certificate: the full symmetry-reduced tree was traversed
// and no valid coloring exists.  A budget interruption is never promoted to
// it.  Any witness returned has been re-verified against the plain biclique
// oracle.  symmetry records the pruning scheme the certificate relies on.
struct SearchOutcome {
    enum class Kind { witness, exhausted, budget_exceeded };
    Kind kind = Kind::budget_exceeded;
    std::optional<EdgeColoring> witness;
    long long nodes = 0;
    std::string symmetry;
};

struct ColorVerdict {
    int color = 0;
    int order = 0;              // the n_i this color must avoid
    bool monochromatic = false; // true means K_{n_i,n_i} present: bad
};

struct WitnessReport {
    std::vector<ColorVerdict> colors;
    bool valid = false;   // every color clean
};

// Per-color check of a supplied coloring against sizes, via the
// non-incremental biclique test on each color class.
// Throws: color count of the coloring differs from sizes; empty or
// non-positive sizes.
auto verify_witness(const EdgeColoring& coloring, const std::vector<int>& sizes)
    -> WitnessReport;

// Depth-first color assignment in row-major cell order.  Requires b in
// [1, 18] and 1 to 4 colors.  Worker parallelism splits on completed row-0
// patterns; every branch gets the full budget, so a branch's result never
// depends on how the others are scheduled.  In deterministic mode (the
// default) the reported witness is the lexicographically least one among
// completed branches and the node count is worker-count-invariant.
auto search_witness(const RamseyInstance& inst, const SearchConfig& config = {})
    -> SearchOutcome;

// Least board size with an exhausted search, when the budget allows the
// scan to reach it.
struct RamseyResult {
    std::optional<int> exact;
    int lower = 1;        // B is at least this
    int searched_to = 0;  // last board size attempted
    std::vector<std::pair<int, SearchOutcome::Kind>> outcomes;
};

auto bipartite_ramsey(const std::vector<int>& sizes, int b_max,
                      const SearchConfig& config = {}) -> RamseyResult;

// Witness file format: line 1 `m n t`, then m lines of n color digits.
// format_witness always ends with a newline; parse_witness accepts a
// missing final one, so the two round-trip byte-exactly.
auto format_witness(const EdgeColoring& coloring) -> std::string;
auto parse_witness(std::istream& in) -> EdgeColoring;

} // namespace bramsey
