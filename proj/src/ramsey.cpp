#include "bramsey/ramsey.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bramsey {

namespace {

constexpr int max_board = 18;
constexpr int max_colors = 4;
constexpr std::uint8_t no_color = 0xff;

auto binom(int n, int k) -> long long
{
    static const auto table = [] {
        std::array<std::array<long long, max_board + 1>, max_board + 1> c{};
        for (int i = 0; i <= max_board; ++i) {
            c[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
                    + c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        return c;
    }();
    if (k < 0 || k > n)
        return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

auto validate(const RamseyInstance& inst, const SearchConfig& config) -> void
{
    if (inst.b < 1 || inst.b > max_board)
        throw std::invalid_argument("board size must lie in [1, 18]");
    if (inst.sizes.empty() || inst.sizes.size() > max_colors)
        throw std::invalid_argument("between 1 and 4 colors are supported");
    for (auto s : inst.sizes)
        if (s < 1)
            throw std::invalid_argument("forbidden biclique orders must be positive");
    if (config.budget < 1)
        throw std::invalid_argument("node budget must be positive");
    if (config.workers < 1)
        throw std::invalid_argument("worker count must be positive");
}

constexpr long long no_winner = std::numeric_limits<long long>::max();

// One depth-first traversal, cells in row-major order, colors tried in
// ascending order at each cell (so the first completion in traversal order
// is the lexicographically least board the active rules admit).
//
// Per color i the tracker `cover[i]` counts, for every n_i-subset of
// columns, how many completed rows carry that subset in color i.  Color i
// at cell (r, c) closes a monochromatic K_{n_i,n_i} exactly when some
// n_i-subset through c, lying inside the current partial row's color-i
// columns, is already covered n_i - 1 times.
//
// The symmetry rules, each justified by an explicit permutation argument,
// are sound but deliberately incomplete; exhaustion only needs soundness.
struct Engine {
    int b = 0, t = 0;
    std::vector<int> sizes;
    bool symmetry = true;
    long long budget = 0;
    int emit_row = 0;   // dfs stops at this row and calls emit()

    long long nodes = 0;
    bool out_of_budget = false;
    bool aborted = false;

    // winner poll, shared across workers; branch_index orders the branches
    const std::atomic<long long>* winner = nullptr;
    long long branch_index = 0;
    bool deterministic = true;

    std::vector<std::uint8_t> cells;
    std::array<std::uint32_t, max_colors> cur_mask{};   // current partial row
    std::array<bool, max_colors> used{};
    std::array<int, max_colors> first_row{};
    std::array<std::vector<std::uint8_t>, max_colors> cover;
    // colors of equal forbidden order, listed below each color
    std::array<std::vector<int>, max_colors> group_smaller;

    std::vector<std::uint8_t> found;
    bool has_found = false;

    auto init(int board, const std::vector<int>& orders, bool with_symmetry,
              long long node_budget) -> void
    {
        b = board;
        t = static_cast<int>(orders.size());
        sizes = orders;
        symmetry = with_symmetry;
        budget = node_budget;
        emit_row = b;
        cells.assign(static_cast<std::size_t>(b) * static_cast<std::size_t>(b), no_color);
        first_row.fill(-1);
        for (int i = 0; i < t; ++i) {
            cover[static_cast<std::size_t>(i)]
                .assign(static_cast<std::size_t>(binom(b, sizes[static_cast<std::size_t>(i)])), 0);
            for (int j = 0; j < i; ++j)
                if (sizes[static_cast<std::size_t>(j)] == sizes[static_cast<std::size_t>(i)])
                    group_smaller[static_cast<std::size_t>(i)].push_back(j);
        }
    }

    auto cell(int r, int c) const -> std::uint8_t
    {
        return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(b)
                     + static_cast<std::size_t>(c)];
    }

    auto set_cell(int r, int c, std::uint8_t v) -> void
    {
        cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(b)
              + static_cast<std::size_t>(c)] = v;
    }

    auto subset_rank(const int* cols, int count) const -> std::size_t
    {
        long long r = 0;
        for (int i = 0; i < count; ++i)
            r += binom(cols[i], i + 1);
        return static_cast<std::size_t>(r);
    }

    // Would coloring (r, c) with `color` close K_{n,n} against completed
    // rows?  Every n-subset through c inside the partial row is checked;
    // for n = 1 the subset {c} alone is checked against a zero threshold,
    // which correctly bans the color outright.
    auto color_blocked(int color, int c) const -> bool
    {
        auto order = sizes[static_cast<std::size_t>(color)];
        const auto& count = cover[static_cast<std::size_t>(color)];
        std::array<int, max_board> partial{};
        int have = 0;
        auto mask = cur_mask[static_cast<std::size_t>(color)];
        while (mask) {
            partial[static_cast<std::size_t>(have++)] = std::countr_zero(mask);
            mask &= mask - 1;
        }
        std::array<int, max_board> pick{};
        auto walk = [&](auto&& self, int from, int got) -> bool {
            if (got == order - 1) {
                std::array<int, max_board> t_set = pick;
                t_set[static_cast<std::size_t>(order - 1)] = c;
                std::sort(t_set.begin(), t_set.begin() + order);
                return count[subset_rank(t_set.data(), order)]
                       >= static_cast<unsigned>(order - 1);
            }
            for (int i = from; i <= have - (order - 1 - got); ++i) {
                pick[static_cast<std::size_t>(got)] = partial[static_cast<std::size_t>(i)];
                if (self(self, i + 1, got + 1))
                    return true;
            }
            return false;
        };
        return walk(walk, 0, 0);
    }

    auto bump_row(int r, int delta) -> void
    {
        for (int color = 0; color < t; ++color) {
            auto order = sizes[static_cast<std::size_t>(color)];
            std::array<int, max_board> cols{};
            int have = 0;
            for (int c = 0; c < b; ++c)
                if (cell(r, c) == color)
                    cols[static_cast<std::size_t>(have++)] = c;
            if (have < order)
                continue;
            auto& count = cover[static_cast<std::size_t>(color)];
            std::array<int, max_board> pick{};
            auto walk = [&](auto&& self, int from, int got) -> void {
                if (got == order) {
                    auto& slot = count[subset_rank(pick.data(), order)];
                    slot = static_cast<std::uint8_t>(static_cast<int>(slot) + delta);
                    return;
                }
                for (int i = from; i <= have - (order - got); ++i) {
                    pick[static_cast<std::size_t>(got)] = cols[static_cast<std::size_t>(i)];
                    self(self, i + 1, got + 1);
                }
            };
            walk(walk, 0, 0);
        }
    }

    // Rules enforced while assigning (r, c).  Soundness arguments:
    //
    // Row 0 non-decreasing: columns of K_{b,b} may be permuted freely, and
    // a stable sort of the columns by their row-0 color leaves every other
    // rule's witness intact (colors already in row 0 keep their relative
    // first occurrences; colors absent from row 0 are handled by the group
    // rule below, which never touches row-0 colors because those always
    // occur first).
    //
    // Group first-occurrence: two colors with equal forbidden order are
    // interchangeable, so within each equal-order group the colors can be
    // relabeled to first appear (in row-major scan order) in ascending
    // color order.  Colors of unequal order are never exchanged; that
    // relabel would change which biclique order applies where.
    auto assignment_allowed(int r, int c, int color) const -> bool
    {
        if (symmetry) {
            if (r == 0 && c > 0 && color < cell(0, c - 1))
                return false;
            if (!used[static_cast<std::size_t>(color)])
                for (auto smaller : group_smaller[static_cast<std::size_t>(color)])
                    if (!used[static_cast<std::size_t>(smaller)])
                        return false;
        }
        return !color_blocked(color, c);
    }

    // Guarded adjacent-row rule, checked when row r >= 1 completes: if the
    // two rows have equal per-color cell counts and every color they use
    // first occurred in rows 0..r-2, then swapping them is a pure row
    // transposition that stays inside the reduced space (row 0 untouched
    // since the guard fails for colors introduced in row 0 when r = 1, and
    // no first occurrence moves).  Repeatedly swapping a violating pair
    // strictly increases the board read as one row-major word, so the
    // rewriting terminates and some equivalent board satisfies the rule;
    // rejecting violators is therefore sound.
    auto row_pair_violated(int r) -> bool
    {
        std::array<int, max_colors> prev_profile{}, cur_profile{};
        for (int c = 0; c < b; ++c) {
            ++prev_profile[cell(r - 1, c)];
            ++cur_profile[cell(r, c)];
        }
        if (prev_profile != cur_profile)
            return false;
        for (int c = 0; c < b; ++c)
            if (first_row[cell(r - 1, c)] > r - 2 || first_row[cell(r, c)] > r - 2)
                return false;
        for (int c = 0; c < b; ++c) {
            if (cell(r, c) < cell(r - 1, c))
                return false;
            if (cell(r, c) > cell(r - 1, c))
                return true;
        }
        return false;
    }

    virtual auto emit() -> bool
    {
        found = cells;
        has_found = true;
        return true;
    }
    virtual ~Engine() = default;

    auto complete_row_and_descend(int r) -> bool
    {
        if (symmetry && r >= 1 && row_pair_violated(r))
            return false;
        bump_row(r, +1);
        auto saved_mask = cur_mask;
        cur_mask.fill(0);
        bool stop = dfs(r + 1, 0);
        cur_mask = saved_mask;
        bump_row(r, -1);
        return stop;
    }

    auto dfs(int r, int c) -> bool
    {
        if (r == emit_row)
            return emit();
        for (int color = 0; color < t; ++color) {
            if (++nodes > budget) {
                out_of_budget = true;
                return true;
            }
            if ((nodes & 1023) == 0 && winner != nullptr) {
                auto w = winner->load(std::memory_order_relaxed);
                if (deterministic ? w < branch_index : w != no_winner) {
                    aborted = true;
                    return true;
                }
            }
            if (!assignment_allowed(r, c, color))
                continue;
            set_cell(r, c, static_cast<std::uint8_t>(color));
            cur_mask[static_cast<std::size_t>(color)] |= std::uint32_t{1} << c;
            bool introduced = !used[static_cast<std::size_t>(color)];
            if (introduced) {
                used[static_cast<std::size_t>(color)] = true;
                first_row[static_cast<std::size_t>(color)] = r;
            }

            bool stop = (c + 1 == b) ? complete_row_and_descend(r) : dfs(r, c + 1);

            if (introduced) {
                used[static_cast<std::size_t>(color)] = false;
                first_row[static_cast<std::size_t>(color)] = -1;
            }
            cur_mask[static_cast<std::size_t>(color)] &= ~(std::uint32_t{1} << c);
            set_cell(r, c, no_color);
            if (stop)
                return true;
        }
        return false;
    }

    // Replay a completed row 0 without attempting or counting anything.
    auto seed_row0(const std::vector<std::uint8_t>& pattern) -> void
    {
        for (int c = 0; c < b; ++c) {
            auto color = pattern[static_cast<std::size_t>(c)];
            set_cell(0, c, color);
            if (!used[color]) {
                used[color] = true;
                first_row[color] = 0;
            }
        }
        bump_row(0, +1);
    }
};

// Row-0 enumeration: same engine, emitting at row 1.
struct Row0Collector final : Engine {
    std::vector<std::vector<std::uint8_t>> patterns;

    auto emit() -> bool override
    {
        patterns.emplace_back(cells.begin(), cells.begin() + b);
        return false;   // keep enumerating siblings
    }
};

struct BranchResult {
    SearchOutcome::Kind kind = SearchOutcome::Kind::budget_exceeded;
    std::vector<std::uint8_t> cells;
    long long nodes = 0;
    bool ran = false;   // false means aborted by an earlier winner
};

auto describe_scheme(bool symmetry) -> std::string
{
    if (!symmetry)
        return "none";
    return "row 0 non-decreasing; equal-order colors first occur in "
           "ascending order; guarded adjacent-row swap";
}

} // namespace

auto verify_witness(const EdgeColoring& coloring, const std::vector<int>& sizes)
    -> WitnessReport
{
    if (static_cast<std::size_t>(coloring.colors()) != sizes.size())
        throw std::invalid_argument("coloring and size list disagree on color count");
    for (auto s : sizes)
        if (s < 1)
            throw std::invalid_argument("forbidden biclique orders must be positive");
    WitnessReport report;
    report.valid = true;
    for (int i = 0; i < coloring.colors(); ++i) {
        auto order = sizes[static_cast<std::size_t>(i)];
        bool mono = has_biclique(color_class(coloring, i), order);
        report.colors.push_back({i, order, mono});
        report.valid = report.valid && !mono;
    }
    return report;
}

auto search_witness(const RamseyInstance& inst, const SearchConfig& config)
    -> SearchOutcome
{
    validate(inst, config);
    auto scheme = describe_scheme(config.symmetry);

    Row0Collector row0;
    row0.init(inst.b, inst.sizes, config.symmetry, config.budget);
    row0.emit_row = 1;
    row0.dfs(0, 0);
    if (row0.out_of_budget)
        return {SearchOutcome::Kind::budget_exceeded, std::nullopt, row0.nodes, scheme};

    auto branches = static_cast<long long>(row0.patterns.size());
    std::vector<BranchResult> results(row0.patterns.size());
    std::atomic<long long> next{0};
    std::atomic<long long> winner{no_winner};

    auto work = [&] {
        for (;;) {
            auto j = next.fetch_add(1);
            if (j >= branches)
                return;
            auto w = winner.load();
            if (config.deterministic ? w < j : w != no_winner)
                continue;   // a decisive witness precedes this branch
            Engine e;
            e.init(inst.b, inst.sizes, config.symmetry, config.budget);
            e.winner = &winner;
            e.branch_index = j;
            e.deterministic = config.deterministic;
            e.seed_row0(row0.patterns[static_cast<std::size_t>(j)]);
            e.dfs(1, 0);
            auto& out = results[static_cast<std::size_t>(j)];
            if (e.aborted)
                continue;
            out.ran = true;
            out.nodes = e.nodes;
            if (e.has_found) {
                out.kind = SearchOutcome::Kind::witness;
                out.cells = e.found;
                auto cur = winner.load();
                while (j < cur && !winner.compare_exchange_weak(cur, j)) {
                }
            } else {
                out.kind = e.out_of_budget ? SearchOutcome::Kind::budget_exceeded
                                           : SearchOutcome::Kind::exhausted;
            }
        }
    };

    auto thread_count = static_cast<int>(
        std::min<long long>(config.workers, std::max<long long>(branches, 1)));
    if (thread_count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    SearchOutcome outcome;
    outcome.symmetry = scheme;
    outcome.nodes = row0.nodes;
    bool any_budget = false;
    for (auto& r : results) {
        if (!r.ran)
            continue;
        if (r.kind == SearchOutcome::Kind::witness) {
            // branches left of a witness always ran to completion, so the
            // first witness in branch order is worker-count-invariant
            outcome.nodes += r.nodes;
            outcome.kind = SearchOutcome::Kind::witness;
            auto coloring = EdgeColoring(inst.b, inst.b, static_cast<int>(inst.sizes.size()),
                                         std::move(r.cells));
            if (!verify_witness(coloring, inst.sizes).valid)
                throw std::logic_error("witness failed re-verification");
            outcome.witness = std::move(coloring);
            return outcome;
        }
        any_budget = any_budget || r.kind == SearchOutcome::Kind::budget_exceeded;
        outcome.nodes += r.nodes;
    }
    outcome.kind = any_budget ? SearchOutcome::Kind::budget_exceeded
                              : SearchOutcome::Kind::exhausted;
    return outcome;
}

auto bipartite_ramsey(const std::vector<int>& sizes, int b_max, const SearchConfig& config)
    -> RamseyResult
{
    if (b_max < 1 || b_max > max_board)
        throw std::invalid_argument("board size limit must lie in [1, 18]");
    RamseyResult result;
    for (int b = 1; b <= b_max; ++b) {
        auto outcome = search_witness({b, sizes}, config);
        result.outcomes.emplace_back(b, outcome.kind);
        result.searched_to = b;
        if (outcome.kind == SearchOutcome::Kind::exhausted) {
            // no good coloring at b, and one existed at b-1 (or b = 1)
            result.exact = b;
            result.lower = b;
            return result;
        }
        if (outcome.kind == SearchOutcome::Kind::budget_exceeded) {
            result.lower = b;   // unresolved at b: B could still be b
            return result;
        }
        result.lower = b + 1;   // witness at b pushes B past b
    }
    return result;
}

auto format_witness(const EdgeColoring& coloring) -> std::string
{
    std::ostringstream out;
    out << coloring.m() << ' ' << coloring.n() << ' ' << coloring.colors() << '\n';
    for (int r = 0; r < coloring.m(); ++r) {
        for (int c = 0; c < coloring.n(); ++c)
            out << coloring.color(r, c);
        out << '\n';
    }
    return out.str();
}

auto parse_witness(std::istream& in) -> EdgeColoring
{
    int m = 0, n = 0, t = 0;
    if (!(in >> m >> n >> t))
        throw std::runtime_error("witness header must read `m n t`");
    if (m < 1 || n < 1 || t < 1 || t > 9)
        throw std::runtime_error("witness header out of range");
    std::string line;
    std::getline(in, line);   // rest of the header line
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r) {
        if (!std::getline(in, line))
            throw std::runtime_error("witness row " + std::to_string(r + 1) + " missing");
        if (static_cast<int>(line.size()) != n)
            throw std::runtime_error("witness row " + std::to_string(r + 1)
                                     + " must hold exactly " + std::to_string(n) + " digits");
        for (char ch : line) {
            if (ch < '0' || ch >= '0' + t)
                throw std::runtime_error("witness row " + std::to_string(r + 1)
                                         + " holds a cell outside the color range");
            cells.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    return {m, n, t, std::move(cells)};
}

} // namespace bramsey
