#include "bramsey/zarankiewicz.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bramsey {

namespace {

constexpr long long sat_cap = 4'000'000'000'000'000'000LL;

// Exact binomials for the bit-packed domain (both sides <= 64).
const auto& small_binom()
{
    static const auto table = [] {
        std::array<std::array<long long, 65>, 65> c{};
        for (int i = 0; i <= 64; ++i) {
            c[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
                    + c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
        return c;
    }();
    return table;
}

// Saturating binomial for arbitrary lookup dimensions.
auto binom_sat(long long n, long long k) -> long long
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > sat_cap)
            return sat_cap;
    }
    return static_cast<long long>(r);
}

constexpr long long infeasible_alloc = -(1LL << 60);

// Maximum total degree of `rows` rows, each capped at `cap`, subject to
// sum(C(d_i, t)) <= budget.  C(d, t) is convex in d, so spending the budget
// on the globally cheapest unit raise first means raising all rows level by
// level; the marginal cost of d -> d+1 is C(d, t-1).  A negative budget
// marks an infeasible state and poisons the result.
auto greedy_alloc(long long rows, long long cap, int t, __int128 budget) -> long long
{
    if (budget < 0)
        return infeasible_alloc;
    if (rows <= 0 || cap <= 0)
        return 0;
    long long total = 0;
    for (long long lvl = 0; lvl < cap; ++lvl) {
        auto cost = binom_sat(lvl, t - 1);
        if (cost == 0) {
            total += rows;
            continue;
        }
        auto affordable = budget / cost;
        if (affordable >= rows) {
            total += rows;
            budget -= static_cast<__int128>(rows) * cost;
        } else {
            total += static_cast<long long>(affordable);
            break;
        }
    }
    return total;
}

auto key_of(const ZRecord& r) { return std::tuple(r.m, r.n, r.t); }

auto validate_record(const ZRecord& r) -> void
{
    if (r.m < 1 || r.n < 1 || r.t < 1)
        throw std::invalid_argument("record dimensions must be positive");
    if (r.m > max_columns || r.n > max_columns)
        throw std::invalid_argument("record dimensions above the 64-column cap");
    auto grid = static_cast<long long>(r.m) * r.n;
    if (r.lb < 0 || r.lb > r.ub || r.ub > grid)
        throw std::invalid_argument("record bounds must satisfy 0 <= lb <= ub <= m*n");
    if (r.provenance == Provenance::computed_exact && r.lb != r.ub)
        throw std::invalid_argument("computed-exact record must have lb == ub");
}

} // namespace

auto to_string(Provenance p) -> std::string
{
    switch (p) {
    case Provenance::paper: return "paper";
    case Provenance::computed_exact: return "computed-exact";
    case Provenance::counting_bound: return "counting-bound";
    case Provenance::witness_search: return "witness-search";
    }
    return "counting-bound";
}

auto parse_provenance(const std::string& token) -> std::optional<Provenance>
{
    if (token == "paper") return Provenance::paper;
    if (token == "computed-exact") return Provenance::computed_exact;
    if (token == "counting-bound") return Provenance::counting_bound;
    if (token == "witness-search") return Provenance::witness_search;
    return std::nullopt;
}

auto ZTable::insert(ZRecord rec) -> void
{
    if (rec.m > rec.n)
        std::swap(rec.m, rec.n);
    validate_record(rec);
    auto at = std::lower_bound(recs_.begin(), recs_.end(), rec,
                               [](const ZRecord& a, const ZRecord& b) {
                                   return key_of(a) < key_of(b);
                               });
    if (at != recs_.end() && key_of(*at) == key_of(rec))
        *at = rec;
    else
        recs_.insert(at, rec);
}

auto ZTable::find(int m, int n, int t) const -> const ZRecord*
{
    if (m > n)
        std::swap(m, n);
    for (const auto& r : recs_)
        if (r.m == m && r.n == n && r.t == t)
            return &r;
    return nullptr;
}

auto ZTable::records() const -> const std::vector<ZRecord>&
{
    return recs_;
}

auto ZTable::builtin() -> const ZTable&
{
    static const ZTable table = [] {
        ZTable t;
        t.insert({16, 17, 2, 71, 71, Provenance::paper});
        t.insert({17, 17, 2, 74, 74, Provenance::paper});
        t.insert({11, 17, 3, 96, 96, Provenance::paper});
        t.insert({12, 17, 3, 103, 103, Provenance::paper});
        t.insert({13, 17, 3, 110, 110, Provenance::paper});
        t.insert({16, 17, 3, 133, 133, Provenance::paper});
        t.insert({17, 17, 3, 141, 141, Provenance::paper});
        t.insert({18, 18, 2, 81, 81, Provenance::paper});
        t.insert({18, 18, 3, 0, 156, Provenance::paper});
        return t;
    }();
    return table;
}

auto load_ztable(std::istream& in) -> ZTable
{
    ZTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        ZRecord rec;
        std::string prov, extra;
        if (!(fields >> rec.m))
            continue;   // blank or comment-only line
        auto fail = [lineno](const std::string& why) -> std::runtime_error {
            return std::runtime_error("z-table line " + std::to_string(lineno) + ": " + why);
        };
        if (!(fields >> rec.n >> rec.t >> rec.lb >> rec.ub >> prov))
            throw fail("expected `m n t lb ub provenance`");
        if (fields >> extra)
            throw fail("trailing field `" + extra + "`");
        auto p = parse_provenance(prov);
        if (!p)
            throw fail("unknown provenance `" + prov + "`");
        rec.provenance = *p;
        if (table.find(rec.m, rec.n, rec.t) != nullptr)
            throw fail("duplicate record for this (m, n, t)");
        try {
            table.insert(rec);
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return table;
}

auto load_ztable_file(const std::string& path) -> ZTable
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open z-table file: " + path);
    return load_ztable(in);
}

auto save_ztable(const ZTable& table, std::ostream& out) -> void
{
    out << "# m n t lb ub provenance\n";
    for (const auto& r : table.records())
        out << r.m << ' ' << r.n << ' ' << r.t << ' ' << r.lb << ' ' << r.ub << ' '
            << to_string(r.provenance) << '\n';
}

auto kst_upper_bound(int m, int n, int t) -> long long
{
    if (t < 1)
        throw std::invalid_argument("t must be positive");
    if (m < 0 || n < 0)
        throw std::invalid_argument("negative part size");
    auto grid = static_cast<long long>(m) * n;
    if (t > std::min(m, n))
        return grid;
    auto budget = static_cast<__int128>(t - 1) * binom_sat(n, t);
    return greedy_alloc(m, n, t, budget);
}

auto z_lookup(const ZTable& table, int m, int n, int t) -> ZRecord
{
    if (m > n)
        std::swap(m, n);
    if (m <= 0 || n <= 0 || t < 1)
        return {std::max(m, 0), std::max(n, 0), t, 0, 0, Provenance::counting_bound};
    auto grid = static_cast<long long>(m) * n;
    if (t > m)
        return {m, n, t, grid, grid, Provenance::counting_bound};

    ZRecord out{m, n, t, 0, std::min(grid, kst_upper_bound(m, n, t)),
                Provenance::counting_bound};
    if (const auto* exact = table.find(m, n, t))
        out.provenance = exact->provenance;
    for (const auto& r : table.records()) {
        // z is non-decreasing in each of m, n, t, so any stored key at or
        // above the query caps it and any key at or below supports it
        if (r.m >= m && r.n >= n && r.t >= t)
            out.ub = std::min(out.ub, r.ub);
        if (r.m <= m && r.n <= n && r.t <= t)
            out.lb = std::max(out.lb, r.lb);
    }
    return out;
}

auto verify_table(const ZTable& table) -> TableReport
{
    TableReport report;
    auto name = [](const ZRecord& r) {
        return "z(" + std::to_string(r.m) + "," + std::to_string(r.n) + ","
               + std::to_string(r.t) + ")";
    };
    for (const auto& r : table.records()) {
        auto grid = static_cast<long long>(r.m) * r.n;
        if (r.lb < 0 || r.lb > r.ub)
            report.violations.push_back(name(r) + ": bounds inverted, lb "
                                        + std::to_string(r.lb) + " vs ub "
                                        + std::to_string(r.ub));
        if (r.ub > grid)
            report.violations.push_back(name(r) + ": ub " + std::to_string(r.ub)
                                        + " exceeds the full grid " + std::to_string(grid));
        auto kst = kst_upper_bound(r.m, r.n, r.t);
        if (r.ub > kst)
            report.violations.push_back(name(r) + ": ub " + std::to_string(r.ub)
                                        + " exceeds the counting bound " + std::to_string(kst));
        if (r.provenance == Provenance::computed_exact && r.lb != r.ub)
            report.violations.push_back(name(r) + ": computed-exact but lb != ub");
        if (r.t > std::min(r.m, r.n) && (r.lb != grid || r.ub != grid))
            report.violations.push_back(name(r) + ": t exceeds min(m,n) so the value is "
                                        + std::to_string(grid) + " exactly");
    }
    for (const auto& lo : table.records())
        for (const auto& hi : table.records()) {
            if (&lo == &hi)
                continue;
            bool dominated = lo.m <= hi.m && lo.n <= hi.n && lo.t <= hi.t;
            if (dominated && lo.lb > hi.ub)
                report.violations.push_back(
                    name(lo) + " lb " + std::to_string(lo.lb) + " exceeds " + name(hi)
                    + " ub " + std::to_string(hi.ub) + ", breaking monotonicity");
        }
    return report;
}

namespace {

constexpr long long max_cover_entries = 1LL << 22;

// Depth-first placement of rows as bit masks, in non-increasing (degree,
// mask) order, with row 0 pinned to the top-of-word mask of its degree
// (column permutations make any first row that shape).  Coverage counters
// hold, per t-subset of columns, how many placed rows contain it; K_{t,t}
// freeness is exactly "every counter <= t-1".  The budget counts attempted
// row placements.
struct RowSearch {
    int m = 0, n = 0, t = 0;
    long long budget = 0;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<std::uint8_t> cover;
    std::vector<int> chosen;           // column stack across nested rows
    std::size_t row_base = 0;          // start of the current row's columns
    std::vector<std::uint64_t> placed;
    long long placed_edges = 0;
    __int128 cover_budget_left = 0;    // (t-1)*C(n,t) - sum C(d_i,t)

    virtual ~RowSearch() = default;
    // true from any hook stops the whole search
    virtual auto on_leaf() -> bool = 0;
    virtual auto on_partial() -> bool { return false; }
    virtual auto should_prune(long long optimistic_total) -> bool = 0;
    virtual auto root() -> void = 0;

    auto binom(int a, int b) const -> long long
    {
        if (b < 0 || b > a)
            return 0;
        return small_binom()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    auto subset_rank(const int* cols, int count) const -> std::size_t
    {
        // combinadic rank over ascending columns c_1 < ... < c_k
        long long r = 0;
        for (int i = 0; i < count; ++i)
            r += binom(cols[i], i + 1);
        return static_cast<std::size_t>(r);
    }

    // Can column c join the candidate row without pushing a t-subset
    // counter past t-1?  The candidate's columns so far sit in
    // chosen[row_base..]; they are all larger than c (bits are picked from
    // the top down), so c is the least element of every subset checked.
    auto column_fits(int c) const -> bool
    {
        std::array<int, 64> t_set{};
        t_set[0] = c;
        auto blocked = [&](auto&& self, std::size_t from, int picked) -> bool {
            if (picked == t - 1) {
                std::array<int, 64> asc = t_set;
                std::sort(asc.begin(), asc.begin() + t);
                return cover[subset_rank(asc.data(), t)] >= static_cast<unsigned>(t - 1);
            }
            for (std::size_t i = from; i < chosen.size(); ++i) {
                t_set[static_cast<std::size_t>(picked) + 1] = chosen[i];
                if (self(self, i + 1, picked + 1))
                    return true;
            }
            return false;
        };
        return !blocked(blocked, row_base, 0);
    }

    auto bump_row_cover(std::uint64_t row, int delta) -> void
    {
        std::array<int, 64> cols{};
        int d = 0;
        while (row) {
            cols[static_cast<std::size_t>(d++)] = std::countr_zero(row);
            row &= row - 1;
        }
        if (d < t)
            return;
        std::array<int, 64> pick{};
        auto walk = [&](auto&& self, int from, int got) -> void {
            if (got == t) {
                auto& cell = cover[subset_rank(pick.data(), t)];
                cell = static_cast<std::uint8_t>(static_cast<int>(cell) + delta);
                return;
            }
            for (int i = from; i <= d - (t - got); ++i) {
                pick[static_cast<std::size_t>(got)] = cols[static_cast<std::size_t>(i)];
                self(self, i + 1, got + 1);
            }
        };
        walk(walk, 0, 0);
    }

    // Candidate masks for the next row: exactly `ones` columns, numerically
    // <= the previous row's mask while `tight`, columns counter-checked as
    // they are picked.  Bit 1 is tried before bit 0, so candidates arrive
    // in descending numeric order (dense masks first).
    auto build_row(int pos, int ones, bool tight, std::uint64_t mask,
                   std::uint64_t prev_mask, int degree) -> bool
    {
        if (out_of_budget)
            return false;
        if (ones == 0)
            return place(mask, degree);
        if (pos < 0 || pos + 1 < ones)
            return false;
        bool prev_bit = (prev_mask >> pos) & 1;
        if ((!tight || prev_bit) && column_fits(pos)) {
            chosen.push_back(pos);
            if (build_row(pos - 1, ones - 1, tight && prev_bit,
                          mask | (std::uint64_t{1} << pos), prev_mask, degree))
                return true;
            chosen.pop_back();
        }
        return build_row(pos - 1, ones, tight && !prev_bit, mask, prev_mask, degree);
    }

    auto place(std::uint64_t mask, int degree) -> bool
    {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        bump_row_cover(mask, +1);
        placed.push_back(mask);
        placed_edges += degree;
        cover_budget_left -= binom(degree, t);

        bool stop = descend(degree, mask);

        cover_budget_left += binom(degree, t);
        placed_edges -= degree;
        placed.pop_back();
        bump_row_cover(mask, -1);
        return stop;
    }

    // Finish the board with all-empty rows in one step.
    auto leaf_with_empty_rows() -> bool
    {
        auto saved = placed.size();
        nodes += static_cast<long long>(m) - static_cast<long long>(saved);
        if (nodes > budget) {
            out_of_budget = true;
            return false;
        }
        placed.resize(static_cast<std::size_t>(m), 0);
        bool stop = on_leaf();
        placed.resize(saved);
        return stop;
    }

    auto descend(int prev_degree, std::uint64_t prev_mask) -> bool
    {
        if (static_cast<int>(placed.size()) == m)
            return on_leaf();
        if (on_partial())
            return true;
        auto outer_base = row_base;
        row_base = chosen.size();
        bool stop = false;
        auto rows_left = static_cast<long long>(m) - static_cast<long long>(placed.size());
        for (int d = prev_degree; d >= 0 && !stop && !out_of_budget; --d) {
            // optimistic completion: this row at d, the rest best-allocated
            auto rest = greedy_alloc(rows_left - 1, d, t,
                                     cover_budget_left - binom(d, t));
            if (should_prune(placed_edges + d + rest))
                continue;
            if (d == 0)
                stop = leaf_with_empty_rows();
            else
                stop = build_row(n - 1, d, d == prev_degree, 0, prev_mask, d);
        }
        row_base = outer_base;
        return stop;
    }

    // Row 0 per degree: only the top-of-word mask.  A fresh board has every
    // counter at zero, so the mask is feasible exactly when one row cannot
    // close a counter by itself, i.e. t >= 2.
    auto root_degree(int d) -> bool
    {
        if (d == 0)
            return leaf_with_empty_rows();
        if (t < 2)
            return false;
        auto mask = ((std::uint64_t{1} << d) - 1) << (n - d);
        return place(mask, d);
    }

    auto run() -> void
    {
        auto entries = binom_sat(n, t);
        if (entries > max_cover_entries)
            throw std::invalid_argument("C(n,t) counter table too large for this search");
        cover.assign(static_cast<std::size_t>(entries), 0);
        cover_budget_left = static_cast<__int128>(t - 1) * entries;
        placed.reserve(static_cast<std::size_t>(m));
        chosen.reserve(static_cast<std::size_t>(n) * 2);
        root();
    }
};

struct ExactSearch final : RowSearch {
    long long best = -1;
    std::vector<std::uint64_t> best_rows;
    long long ceiling = 0;   // min(grid, kst); reaching it proves optimality

    auto on_leaf() -> bool override
    {
        if (placed_edges > best) {
            best = placed_edges;
            best_rows = placed;
        }
        return best >= ceiling;
    }

    auto should_prune(long long optimistic_total) -> bool override
    {
        return optimistic_total <= best;
    }

    auto root() -> void override
    {
        for (int d = n; d >= 0 && !out_of_budget; --d) {
            auto rest = greedy_alloc(m - 1, d, t, cover_budget_left - binom(d, t));
            if (should_prune(d + rest))
                continue;
            if (root_degree(d))
                return;
        }
    }
};

struct TargetSearch final : RowSearch {
    long long target = 0;
    std::vector<std::uint64_t> found_rows;
    bool found = false;

    auto on_partial() -> bool override
    {
        if (placed_edges < target)
            return false;
        found = true;
        found_rows = placed;
        found_rows.resize(static_cast<std::size_t>(m), 0);
        return true;
    }

    auto on_leaf() -> bool override { return on_partial(); }

    auto should_prune(long long optimistic_total) -> bool override
    {
        return optimistic_total < target;
    }

    auto root() -> void override
    {
        // a board with >= target edges and non-increasing rows has first-row
        // degree at least ceil(target/m); the near-regular shapes known to
        // carry dense K_{t,t}-free boards are tried before the skewed ones
        auto lowest = (target + m - 1) / m;
        for (auto d = static_cast<int>(lowest); d <= n && !found && !out_of_budget; ++d)
            if (root_degree(d))
                return;
    }
};

} // namespace

auto z_exact(int m, int n, int t, long long budget, const ZTable* table) -> ZRecord
{
    if (budget < 1)
        throw std::invalid_argument("node budget must be positive");
    if (t < 1)
        throw std::invalid_argument("t must be positive");
    if (m < 0 || n < 0 || std::max(m, n) > max_columns)
        throw std::invalid_argument("part sizes must lie in [0, 64]");
    if (m > n)
        std::swap(m, n);
    auto grid = static_cast<long long>(m) * n;
    if (t > m || grid == 0)
        return {m, n, t, grid, grid, Provenance::computed_exact};

    ExactSearch s;
    s.m = m;
    s.n = n;
    s.t = t;
    s.budget = budget;
    s.ceiling = std::min(grid, kst_upper_bound(m, n, t));
    s.run();

    if (s.out_of_budget) {
        auto ub = s.ceiling;
        if (table)
            ub = std::min(ub, z_lookup(*table, m, n, t).ub);
        return {m, n, t, std::max(s.best, 0LL), ub, Provenance::witness_search};
    }
    return {m, n, t, s.best, s.best, Provenance::computed_exact};
}

auto extremal_witness(int m, int n, int t, long long target, long long budget)
    -> WitnessOutcome
{
    if (budget < 1)
        throw std::invalid_argument("node budget must be positive");
    if (t < 1)
        throw std::invalid_argument("t must be positive");
    if (m < 0 || n < 0 || std::max(m, n) > max_columns)
        throw std::invalid_argument("part sizes must lie in [0, 64]");
    auto grid = static_cast<long long>(m) * n;
    if (target > grid)
        throw std::invalid_argument("target exceeds the full grid");

    auto certify = [&](BiGraph g, long long nodes) -> WitnessOutcome {
        if (has_biclique(g, t) || g.edges() < target)
            throw std::logic_error("witness failed re-verification");
        return {WitnessOutcome::Kind::found, std::move(g), nodes};
    };

    if (t > std::min(m, n))
        return certify(BiGraph::complete(m, n), 0);
    if (target <= 0)
        return certify(BiGraph(m, n), 0);

    bool swapped = m > n;
    if (swapped)
        std::swap(m, n);

    TargetSearch s;
    s.m = m;
    s.n = n;
    s.t = t;
    s.budget = budget;
    s.target = target;
    s.run();

    if (s.found) {
        BiGraph g(m, n, s.found_rows);
        if (swapped) {
            std::vector<std::uint64_t> flipped(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    if (g.edge(i, j))
                        flipped[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            g = BiGraph(n, m, std::move(flipped));
        }
        return certify(std::move(g), s.nodes);
    }
    if (s.out_of_budget)
        return {WitnessOutcome::Kind::budget_exhausted, std::nullopt, s.nodes};
    return {WitnessOutcome::Kind::impossible, std::nullopt, s.nodes};
}

} // namespace bramsey
