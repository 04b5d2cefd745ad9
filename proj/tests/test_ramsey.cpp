#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bramsey/bigraph.hpp"
#include "bramsey/ramsey.hpp"

using namespace bramsey;

namespace {

auto coloring_from(std::initializer_list<std::string> rows, int t) -> EdgeColoring
{
    std::vector<std::uint8_t> cells;
    auto m = static_cast<int>(rows.size());
    int n = 0;
    for (const auto& row : rows) {
        n = static_cast<int>(row.size());
        for (char ch : row)
            cells.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return {m, n, t, std::move(cells)};
}

} // namespace

TEST_CASE("witness verification reports per-color bicliques")
{
    SUBCASE("a constant coloring of the 2 x 2 board is monochromatic")
    {
        auto report = verify_witness(coloring_from({"00", "00"}, 1), {2});
        CHECK(!report.valid);
        REQUIRE(report.colors.size() == 1);
        CHECK(report.colors[0].monochromatic);
        CHECK(report.colors[0].order == 2);
    }

    SUBCASE("a checkerboard avoids single-color 2 x 2 blocks")
    {
        auto report = verify_witness(coloring_from({"01", "10"}, 2), {2, 2});
        CHECK(report.valid);
        CHECK(!report.colors[0].monochromatic);
        CHECK(!report.colors[1].monochromatic);
    }

    SUBCASE("verdicts are per color, not aggregate")
    {
        // color 1 fills a 2 x 2 corner, color 0 is a single cell
        auto report = verify_witness(coloring_from({"110", "110", "001"}, 2), {2, 2});
        CHECK(!report.valid);
        CHECK(!report.colors[0].monochromatic);
        CHECK(report.colors[1].monochromatic);
    }

    SUBCASE("mismatched inputs are rejected")
    {
        CHECK_THROWS_AS(verify_witness(coloring_from({"01", "10"}, 2), {2}),
                        std::invalid_argument);
        CHECK_THROWS_AS(verify_witness(coloring_from({"00"}, 1), {0}),
                        std::invalid_argument);
    }
}

TEST_CASE("search finds witnesses below the threshold and certifies above")
{
    SUBCASE("a 4 x 4 two-coloring avoiding both diagonals exists")
    {
        auto out = search_witness({4, {2, 2}});
        REQUIRE(out.kind == SearchOutcome::Kind::witness);
        REQUIRE(out.witness.has_value());
        CHECK(verify_witness(*out.witness, {2, 2}).valid);
        CHECK(out.nodes > 0);
        CHECK(!out.symmetry.empty());
    }

    SUBCASE("no 5 x 5 two-coloring avoids both diagonals")
    {
        auto out = search_witness({5, {2, 2}});
        CHECK(out.kind == SearchOutcome::Kind::exhausted);
        CHECK(out.nodes > 0);
        CHECK(!out.witness.has_value());
    }

    SUBCASE("an order-1 color can never be used")
    {
        CHECK(search_witness({1, {1}}).kind == SearchOutcome::Kind::exhausted);

        // with a second color of order 2 the single cell still has a home
        auto out = search_witness({1, {1, 2}});
        REQUIRE(out.kind == SearchOutcome::Kind::witness);
        CHECK(out.witness->color(0, 0) == 1);

        // but a 2 x 2 board forces color 1 everywhere, which is K_{2,2}
        CHECK(search_witness({2, {1, 2}}).kind == SearchOutcome::Kind::exhausted);
    }

    SUBCASE("instances outside the supported ranges are rejected")
    {
        CHECK_THROWS_AS(search_witness({0, {2, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(search_witness({19, {2, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(search_witness({3, {}}), std::invalid_argument);
        CHECK_THROWS_AS(search_witness({3, {2, 2, 2, 2, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(search_witness({3, {2, 0}}), std::invalid_argument);
    }
}

TEST_CASE("budget starvation is reported, never promoted to exhaustion")
{
    SearchConfig starved;
    starved.budget = 3;
    auto out = search_witness({5, {2, 2}}, starved);
    CHECK(out.kind == SearchOutcome::Kind::budget_exceeded);

    starved.budget = 1;
    CHECK(search_witness({5, {2, 2}}, starved).kind
          == SearchOutcome::Kind::budget_exceeded);

    SearchConfig zero;
    zero.budget = 0;
    CHECK_THROWS_AS(search_witness({5, {2, 2}}, zero), std::invalid_argument);
}

TEST_CASE("ramsey numbers fall out of the scan")
{
    SUBCASE("two colors of order two give five")
    {
        auto r = bipartite_ramsey({2, 2}, 8);
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 5);
        REQUIRE(r.outcomes.size() == 5);
        for (int b = 1; b <= 4; ++b) {
            CHECK(r.outcomes[static_cast<std::size_t>(b - 1)].first == b);
            CHECK(r.outcomes[static_cast<std::size_t>(b - 1)].second
                  == SearchOutcome::Kind::witness);
        }
        CHECK(r.outcomes[4].second == SearchOutcome::Kind::exhausted);
    }

    SUBCASE("an order-1 color settles immediately")
    {
        auto r = bipartite_ramsey({1}, 3);
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 1);
    }

    SUBCASE("orders one and two settle at two")
    {
        auto r = bipartite_ramsey({1, 2}, 4);
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 2);
    }

    SUBCASE("a starved scan returns a bracket, not a fake value")
    {
        SearchConfig starved;
        starved.budget = 2;
        auto r = bipartite_ramsey({2, 2}, 8, starved);
        CHECK(!r.exact.has_value());
        CHECK(r.outcomes.back().second == SearchOutcome::Kind::budget_exceeded);
    }

    SUBCASE("a scan capped below the answer reports the floor it reached")
    {
        auto r = bipartite_ramsey({2, 2}, 3);
        CHECK(!r.exact.has_value());
        CHECK(r.lower == 4);
        CHECK(r.searched_to == 3);
    }
}

TEST_CASE("symmetry rules prune isomorphs only")
{
    SearchConfig plain;
    plain.symmetry = false;

    SUBCASE("outcome kinds agree with and without pruning")
    {
        for (int b = 1; b <= 4; ++b) {
            auto with = search_witness({b, {2, 2}});
            auto without = search_witness({b, {2, 2}}, plain);
            CAPTURE(b);
            CHECK(with.kind == without.kind);
            CHECK(with.nodes <= without.nodes);
        }

        // unequal orders exercise the group restriction on color swaps
        auto with = search_witness({2, {1, 2}});
        auto without = search_witness({2, {1, 2}}, plain);
        CHECK(with.kind == SearchOutcome::Kind::exhausted);
        CHECK(without.kind == SearchOutcome::Kind::exhausted);
        CHECK(with.nodes <= without.nodes);
    }

    SUBCASE("the scheme is recorded in the outcome")
    {
        CHECK(search_witness({2, {2, 2}}).symmetry
              != search_witness({2, {2, 2}}, plain).symmetry);
        CHECK(search_witness({2, {2, 2}}, plain).symmetry == "none");
    }
}

TEST_CASE("worker count changes neither outcome nor node count")
{
    for (int workers : {1, 2, 4}) {
        SearchConfig config;
        config.workers = workers;

        auto exhausted = search_witness({5, {2, 2}}, config);
        auto baseline_e = search_witness({5, {2, 2}});
        CAPTURE(workers);
        CHECK(exhausted.kind == baseline_e.kind);
        CHECK(exhausted.nodes == baseline_e.nodes);

        auto witness = search_witness({4, {2, 2}}, config);
        auto baseline_w = search_witness({4, {2, 2}});
        REQUIRE(witness.witness.has_value());
        CHECK(witness.witness->cells() == baseline_w.witness->cells());
        CHECK(witness.nodes == baseline_w.nodes);
    }
}

TEST_CASE("outcome kind is invariant under reordering the color list")
{
    CHECK(search_witness({2, {2, 1}}).kind == search_witness({2, {1, 2}}).kind);
    CHECK(search_witness({1, {2, 1}}).kind == search_witness({1, {1, 2}}).kind);
    CHECK(search_witness({4, {2, 2}}).kind == search_witness({4, {2, 2}}).kind);

    auto via_21 = bipartite_ramsey({2, 1}, 4);
    auto via_12 = bipartite_ramsey({1, 2}, 4);
    REQUIRE(via_21.exact.has_value());
    CHECK(*via_21.exact == *via_12.exact);
}

TEST_CASE("witness files round-trip byte-exactly")
{
    auto original = coloring_from({"0112", "1201", "2010"}, 3);
    auto text = format_witness(original);
    CHECK(text == "3 4 3\n0112\n1201\n2010\n");

    std::istringstream in(text);
    auto parsed = parse_witness(in);
    CHECK(parsed == original);

    SUBCASE("the final newline is optional on input")
    {
        std::istringstream trimmed("3 4 3\n0112\n1201\n2010");
        CHECK(parse_witness(trimmed) == original);
    }

    SUBCASE("malformed files are rejected with a reason")
    {
        auto rejects = [](const std::string& text, const std::string& fragment) {
            std::istringstream bad(text);
            try {
                parse_witness(bad);
            } catch (const std::runtime_error& e) {
                CHECK(std::string(e.what()).find(fragment) != std::string::npos);
                return;
            }
            FAIL_CHECK("expected a parse error mentioning: " << fragment);
        };
        rejects("", "header");
        rejects("2 2\n00\n00\n", "header");
        rejects("2 2 2\n00\n", "row 2");
        rejects("2 2 2\n000\n00\n", "row 1");
        rejects("2 2 2\n02\n00\n", "color range");
    }
}

TEST_CASE("deterministic searches yield the least admissible board")
{
    auto out = search_witness({4, {2, 2}});
    REQUIRE(out.witness.has_value());
    const auto& w = *out.witness;

    // branch order is the lexicographic order of row 0, and within a branch
    // colors are tried in ascending order, so no admissible board precedes
    // the returned one
    CHECK(w.color(0, 0) == 0);
    for (int c = 1; c < 4; ++c)
        CHECK(w.color(0, c) >= w.color(0, c - 1));
}
