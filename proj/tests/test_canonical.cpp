#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bramsey/bigraph.hpp"
#include "bramsey/canonical.hpp"

using namespace bramsey;

namespace {

auto permute(const BiGraph& g, const std::vector<int>& row_perm,
             const std::vector<int>& col_perm) -> BiGraph
{
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.m()), 0);
    for (int i = 0; i < g.m(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.edge(i, j))
                rows[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])] |=
                    std::uint64_t{1} << col_perm[static_cast<std::size_t>(j)];
    return BiGraph(g.m(), g.n(), std::move(rows));
}

auto random_graph(int m, int n, std::mt19937& rng) -> BiGraph
{
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < m; ++i)
        rows.push_back(bits(rng));
    return BiGraph(m, n, std::move(rows));
}

auto random_perm(int k, std::mt19937& rng) -> std::vector<int>
{
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Reference key for tiny graphs: minimum row vector over every row and
// column permutation, compared the same way the key compares (bit 0 first).
auto brute_key(const BiGraph& g) -> std::vector<std::uint64_t>
{
    auto reverse_bits = [n = g.n()](std::uint64_t v) {
        std::uint64_t out = 0;
        for (int j = 0; j < n; ++j)
            if ((v >> j) & 1)
                out |= std::uint64_t{1} << (n - 1 - j);
        return out;
    };
    std::vector<int> rp(static_cast<std::size_t>(g.m()));
    std::iota(rp.begin(), rp.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<int> cp(static_cast<std::size_t>(g.n()));
        std::iota(cp.begin(), cp.end(), 0);
        do {
            auto h = permute(g, rp, cp);
            std::vector<std::uint64_t> mat;
            for (auto r : h.rows())
                mat.push_back(reverse_bits(r));
            if (best.empty() || mat < best)
                best = mat;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    for (auto& r : best)
        r = reverse_bits(r);
    return best;
}

auto key_matrix(const BiGraph& g) -> std::vector<std::uint64_t>
{
    auto key = canonical_key(g);
    int m = key[0], n = key[1];
    REQUIRE(m == g.m());
    REQUIRE(n == g.n());
    std::vector<std::uint64_t> mat;
    std::size_t at = 2;
    for (int i = 0; i < m; ++i) {
        std::uint64_t r = 0;
        for (int byte = 0; byte * 8 < n; ++byte)
            r |= static_cast<std::uint64_t>(static_cast<unsigned char>(key[at++])) << (8 * byte);
        mat.push_back(r);
    }
    return mat;
}

} // namespace

TEST_CASE("key is invariant under row and column permutations")
{
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_graph(6, 7, rng);
        auto key = canonical_key(g);
        for (int p = 0; p < 8; ++p) {
            auto h = permute(g, random_perm(6, rng), random_perm(7, rng));
            CHECK(canonical_key(h) == key);
        }
    }
}

TEST_CASE("key matches the permutation-enumeration reference on tiny graphs")
{
    std::mt19937 rng(31337);
    SUBCASE("every 2x3 graph")
    {
        for (std::uint32_t code = 0; code < 64; ++code) {
            BiGraph g(2, 3, {code & 7, (code >> 3) & 7});
            CHECK(key_matrix(g) == brute_key(g));
        }
    }
    SUBCASE("random 4x4 graphs")
    {
        for (int trial = 0; trial < 120; ++trial) {
            auto g = random_graph(4, 4, rng);
            CHECK(key_matrix(g) == brute_key(g));
        }
    }
    SUBCASE("random 3x5 and 5x3 graphs")
    {
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_graph(3, 5, rng);
            CHECK(key_matrix(g) == brute_key(g));
            auto h = random_graph(5, 3, rng);
            CHECK(key_matrix(h) == brute_key(h));
        }
    }
}

TEST_CASE("key separates graphs that differ structurally")
{
    // perfect matching vs two disjoint paths, both 3 edges on 3x3
    BiGraph matching(3, 3, {0b001, 0b010, 0b100});
    BiGraph paths(3, 3, {0b011, 0b100, 0b000});
    CHECK(canonical_key(matching) != canonical_key(paths));

    // same degree sequences on both sides, different graphs
    BiGraph a(4, 4, {0b0011, 0b0011, 0b1100, 0b1100});
    BiGraph b(4, 4, {0b0011, 0b0101, 0b1100, 0b1010});
    CHECK(degree_sequence(a, Side::X) == degree_sequence(b, Side::X));
    CHECK(degree_sequence(a, Side::Y) == degree_sequence(b, Side::Y));
    CHECK(canonical_key(a) != canonical_key(b));
}

TEST_CASE("highly symmetric graphs stay cheap")
{
    // these blow up factorially without the tied-row transposition prune
    CHECK(canonical_key(BiGraph(24, 24)).size() == 2 + 24 * 3);
    CHECK(canonical_key(BiGraph::complete(24, 24)) != canonical_key(BiGraph(24, 24)));

    std::vector<std::uint64_t> identity(18);
    for (int i = 0; i < 18; ++i)
        identity[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    BiGraph eye(18, 18, identity);
    auto key = canonical_key(eye);

    std::mt19937 rng(5);
    for (int p = 0; p < 4; ++p)
        CHECK(canonical_key(permute(eye, random_perm(18, rng), random_perm(18, rng))) == key);

    // complete minus a matching, another worst case for naive tie branching
    std::vector<std::uint64_t> rows(16);
    for (int i = 0; i < 16; ++i)
        rows[static_cast<std::size_t>(i)] = 0xffff & ~(std::uint64_t{1} << i);
    BiGraph comate(16, 16, rows);
    auto ck = canonical_key(comate);
    for (int p = 0; p < 4; ++p)
        CHECK(canonical_key(permute(comate, random_perm(16, rng), random_perm(16, rng))) == ck);
}

TEST_CASE("side cap is enforced")
{
    CHECK_THROWS_AS(canonical_key(BiGraph(25, 3)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_key(BiGraph(3, 25)), std::invalid_argument);
    CHECK(canonical_key(BiGraph(0, 0)).size() == 2);
}
