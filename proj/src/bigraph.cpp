#include "bramsey/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace bramsey {

namespace {

auto check_dims(int m, int n) -> void
{
    if (m < 0 || n < 0)
        throw std::invalid_argument("negative part size");
    if (m > max_columns || n > max_columns)
        throw std::invalid_argument("part size above the 64-column word cap");
}

auto low_bits(int n) -> std::uint64_t
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

BiGraph::BiGraph(int m, int n) : m_(m), n_(n), rows_(static_cast<std::size_t>(std::max(m, 0)))
{
    check_dims(m, n);
}

BiGraph::BiGraph(int m, int n, std::vector<std::uint64_t> rows)
    : m_(m), n_(n), rows_(std::move(rows))
{
    check_dims(m, n);
    if (rows_.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("row count does not match m");
    for (auto r : rows_)
        if ((r & ~low_bits(n)) != 0)
            throw std::invalid_argument("row has bits outside the column range");
}

auto BiGraph::complete(int m, int n) -> BiGraph
{
    check_dims(m, n);
    return BiGraph(m, n, std::vector<std::uint64_t>(static_cast<std::size_t>(m), low_bits(n)));
}

auto BiGraph::row(int i) const -> std::uint64_t
{
    if (i < 0 || i >= m_)
        throw std::out_of_range("row index " + std::to_string(i));
    return rows_[static_cast<std::size_t>(i)];
}

auto BiGraph::edge(int i, int j) const -> bool
{
    if (j < 0 || j >= n_)
        throw std::out_of_range("column index " + std::to_string(j));
    return (row(i) >> j) & 1;
}

auto BiGraph::edges() const -> int
{
    int total = 0;
    for (auto r : rows_)
        total += std::popcount(r);
    return total;
}

auto BiGraph::column_mask() const -> std::uint64_t
{
    return low_bits(n_);
}

EdgeColoring::EdgeColoring(int m, int n, int t, std::vector<std::uint8_t> cells)
    : m_(m), n_(n), t_(t), cells_(std::move(cells))
{
    check_dims(m, n);
    if (t < 1)
        throw std::invalid_argument("need at least one color");
    if (cells_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(n))
        throw std::invalid_argument("cell count does not match m*n");
    for (auto c : cells_)
        if (c >= t_)
            throw std::invalid_argument("color index out of range");
}

auto EdgeColoring::color(int i, int j) const -> int
{
    if (i < 0 || i >= m_ || j < 0 || j >= n_)
        throw std::out_of_range("cell out of range");
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_)
                  + static_cast<std::size_t>(j)];
}

namespace {

// Rows sorted by ascending degree so the thin rows, which shrink the running
// intersection fastest, are tried first.
auto biclique_dfs(const std::vector<std::uint64_t>& rows, std::size_t from,
                  std::uint64_t inter, int need, int s) -> bool
{
    if (need == 0)
        return true;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= rows.size(); ++i) {
        auto next = inter & rows[i];
        if (std::popcount(next) >= s && biclique_dfs(rows, i + 1, next, need - 1, s))
            return true;
    }
    return false;
}

} // namespace

auto has_biclique(const BiGraph& g, int s) -> bool
{
    if (s < 1)
        throw std::invalid_argument("biclique order must be positive");
    if (s > g.m() || s > g.n())
        return false;
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(g.m()));
    for (auto r : g.rows())
        if (std::popcount(r) >= s)
            rows.push_back(r);
    if (rows.size() < static_cast<std::size_t>(s))
        return false;
    std::sort(rows.begin(), rows.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    return biclique_dfs(rows, 0, g.column_mask(), s, s);
}

auto common_neighbors(const BiGraph& g, int i, int j) -> std::uint64_t
{
    if (i == j)
        throw std::invalid_argument("common_neighbors needs two distinct rows");
    return g.row(i) & g.row(j);
}

auto degree_sequence(const BiGraph& g, Side side) -> DegreeSequence
{
    DegreeSequence out;
    if (side == Side::X) {
        out.reserve(static_cast<std::size_t>(g.m()));
        for (auto r : g.rows())
            out.push_back(std::popcount(r));
    } else {
        out.assign(static_cast<std::size_t>(g.n()), 0);
        for (auto r : g.rows())
            while (r) {
                out[static_cast<std::size_t>(std::countr_zero(r))] += 1;
                r &= r - 1;
            }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

auto complement(const BiGraph& g) -> BiGraph
{
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(g.m()));
    for (auto r : g.rows())
        rows.push_back(~r & g.column_mask());
    return BiGraph(g.m(), g.n(), std::move(rows));
}

auto color_class(const EdgeColoring& c, int color) -> BiGraph
{
    if (color < 0 || color >= c.colors())
        throw std::invalid_argument("color index out of range");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(c.m()), 0);
    for (int i = 0; i < c.m(); ++i)
        for (int j = 0; j < c.n(); ++j)
            if (c.color(i, j) == color)
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return BiGraph(c.m(), c.n(), std::move(rows));
}

} // namespace bramsey
