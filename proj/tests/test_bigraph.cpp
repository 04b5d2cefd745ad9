#include <doctest.h>

#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bramsey/bigraph.hpp"

using namespace bramsey;

namespace {

// Reference biclique test: walk every s-subset of rows and check the plain
// intersection.  Exponential, fine for the tiny graphs used here.
auto oracle_has_biclique(const BiGraph& g, int s) -> bool
{
    if (s > g.m() || s > g.n())
        return false;
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t inter = g.column_mask();
        for (int i : pick)
            inter &= g.row(i);
        if (std::popcount(inter) >= s)
            return true;
        int k = s - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == g.m() - s + k)
            --k;
        if (k < 0)
            return false;
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < s; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

auto random_graph(int m, int n, std::mt19937& rng) -> BiGraph
{
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < m; ++i)
        rows.push_back(bits(rng));
    return BiGraph(m, n, std::move(rows));
}

} // namespace

TEST_CASE("construction validates its input")
{
    CHECK_THROWS_AS(BiGraph(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(BiGraph(3, 65), std::invalid_argument);
    CHECK_THROWS_AS(BiGraph(2, 3, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(BiGraph(1, 3, {0b1000}), std::invalid_argument);

    BiGraph empty(4, 7);
    CHECK(empty.edges() == 0);
    CHECK(empty.column_mask() == 0x7f);

    auto full = BiGraph::complete(3, 5);
    CHECK(full.edges() == 15);
    CHECK(full.edge(2, 4));
    CHECK_THROWS_AS(full.edge(2, 5), std::out_of_range);
    CHECK_THROWS_AS(full.row(3), std::out_of_range);
}

TEST_CASE("zero-size parts are legal")
{
    BiGraph g(0, 5);
    CHECK(g.edges() == 0);
    CHECK_FALSE(has_biclique(BiGraph(0, 0), 1));
    CHECK(degree_sequence(g, Side::Y) == DegreeSequence{0, 0, 0, 0, 0});
}

TEST_CASE("has_biclique on hand-checked graphs")
{
    CHECK_THROWS_AS(has_biclique(BiGraph(2, 2), 0), std::invalid_argument);

    // path x0-y0, x0-y1, x1-y1: no K_{2,2}
    BiGraph path(2, 2, {0b11, 0b10});
    CHECK(has_biclique(path, 1));
    CHECK_FALSE(has_biclique(path, 2));

    CHECK(has_biclique(BiGraph::complete(3, 3), 3));
    CHECK_FALSE(has_biclique(BiGraph::complete(3, 3), 4));

    // 4x4 cycle-like class from a two-coloring of the 4x4 board
    BiGraph c(4, 4, {0b0001, 0b0110, 0b1010, 0b1100});
    CHECK_FALSE(has_biclique(c, 2));
}

TEST_CASE("has_biclique agrees with the subset oracle")
{
    SUBCASE("every 3x3 graph")
    {
        for (std::uint32_t code = 0; code < 512; ++code) {
            BiGraph g(3, 3,
                      {code & 7, (code >> 3) & 7, (code >> 6) & 7});
            for (int s = 1; s <= 3; ++s)
                CHECK(has_biclique(g, s) == oracle_has_biclique(g, s));
        }
    }

    SUBCASE("random 6x6 graphs")
    {
        std::mt19937 rng(20260816);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = random_graph(6, 6, rng);
            for (int s = 1; s <= 4; ++s)
                CHECK(has_biclique(g, s) == oracle_has_biclique(g, s));
        }
    }
}

TEST_CASE("biclique containment is monotone in s")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(8, 8, rng);
        bool prev = has_biclique(g, 1);
        for (int s = 2; s <= 8; ++s) {
            bool cur = has_biclique(g, s);
            if (cur)
                CHECK(prev);
            prev = cur;
        }
    }
}

TEST_CASE("degrees, complement, common neighbourhoods")
{
    BiGraph g(3, 4, {0b1011, 0b0011, 0b0100});
    CHECK(degree_sequence(g, Side::X) == DegreeSequence{3, 2, 1});
    CHECK(degree_sequence(g, Side::Y) == DegreeSequence{2, 2, 1, 1});

    auto co = complement(g);
    CHECK(co.edges() == 12 - g.edges());
    CHECK(complement(co) == g);

    CHECK(common_neighbors(g, 0, 1) == 0b0011);
    CHECK(common_neighbors(g, 1, 2) == 0);
    CHECK_THROWS_AS(common_neighbors(g, 1, 1), std::invalid_argument);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = random_graph(5, 7, rng);
        auto dx = degree_sequence(h, Side::X);
        auto dy = degree_sequence(h, Side::Y);
        CHECK(std::accumulate(dx.begin(), dx.end(), 0) == h.edges());
        CHECK(std::accumulate(dy.begin(), dy.end(), 0) == h.edges());
    }
}

TEST_CASE("colorings split the board into disjoint classes")
{
    CHECK_THROWS_AS(EdgeColoring(2, 2, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(2, 2, 2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(2, 2, 2, {0, 1, 0}), std::invalid_argument);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> cells(30);
        for (auto& c : cells)
            c = static_cast<std::uint8_t>(pick(rng));
        EdgeColoring col(5, 6, 3, cells);

        int total = 0;
        std::uint64_t seen = 0;
        for (int color = 0; color < 3; ++color) {
            auto cls = color_class(col, color);
            total += cls.edges();
            for (int i = 0; i < 5; ++i) {
                CHECK((seen & (cls.row(i) << (6 * i))) == 0);
                seen |= cls.row(i) << (6 * i);
            }
        }
        CHECK(total == 30);
    }
}
