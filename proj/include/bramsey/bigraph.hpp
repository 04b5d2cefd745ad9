#pragma once

#include <cstdint>
#include <vector>

// Bipartite graphs on parts X (rows) and Y (columns), columns packed into a
// single 64-bit word per row.  All types here are values: construct once,
// never mutate; every operation is a pure function returning fresh values.

namespace bramsey {

inline constexpr int max_columns = 64;

enum class Side { X, Y };

// Degrees sorted non-increasing.
using DegreeSequence = std::vector<int>;

class BiGraph {
public:
    // edgeless m x n graph
    BiGraph(int m, int n);

    // rows[i] bit j set means edge (i, j); bits at j >= n must be clear
    BiGraph(int m, int n, std::vector<std::uint64_t> rows);

    static auto complete(int m, int n) -> BiGraph;

    auto m() const -> int { return m_; }
    auto n() const -> int { return n_; }
    auto row(int i) const -> std::uint64_t;
    auto rows() const -> const std::vector<std::uint64_t>& { return rows_; }
    auto edge(int i, int j) const -> bool;
    auto edges() const -> int;
    auto column_mask() const -> std::uint64_t;   // low n bits set

    friend auto operator==(const BiGraph&, const BiGraph&) -> bool = default;

private:
    int m_, n_;
    std::vector<std::uint64_t> rows_;
};

// t-edge-coloring of the complete bipartite board K_{m,n}: every cell (i, j)
// carries a color in [0, t).
class EdgeColoring {
public:
    EdgeColoring(int m, int n, int t, std::vector<std::uint8_t> cells);

    auto m() const -> int { return m_; }
    auto n() const -> int { return n_; }
    auto colors() const -> int { return t_; }
    auto color(int i, int j) const -> int;
    auto cells() const -> const std::vector<std::uint8_t>& { return cells_; }

    friend auto operator==(const EdgeColoring&, const EdgeColoring&) -> bool = default;

private:
    int m_, n_, t_;
    std::vector<std::uint8_t> cells_;   // row-major
};

// True iff K_{s,s} is a subgraph, i.e. some s rows whose intersection of
// neighbourhoods spans at least s columns.  s > min(m, n) is simply false.
auto has_biclique(const BiGraph& g, int s) -> bool;

// Column set adjacent to both row i and row j (i != j).
auto common_neighbors(const BiGraph& g, int i, int j) -> std::uint64_t;

auto degree_sequence(const BiGraph& g, Side side) -> DegreeSequence;

auto complement(const BiGraph& g) -> BiGraph;

// Subgraph of K_{m,n} formed by the cells of one color.
auto color_class(const EdgeColoring& c, int color) -> BiGraph;

} // namespace bramsey
