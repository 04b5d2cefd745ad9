#include "bramsey/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bramsey {

namespace {

// Ordered partition cell: a set of original columns occupying the canonical
// position range [start, start + popcount(columns)).
struct Block {
    int start;
    std::uint64_t columns;
};

// Lex order on bit patterns read from position 0 upward; the pattern with a
// zero at the first differing position is smaller.
auto pattern_less(std::uint64_t a, std::uint64_t b) -> bool
{
    auto diff = a ^ b;
    if (diff == 0)
        return false;
    return ((a >> std::countr_zero(diff)) & 1) == 0;
}

struct Searcher {
    int m = 0, n = 0;
    std::vector<std::uint64_t> rows;       // original masks
    std::vector<char> used;
    std::vector<std::uint64_t> emitted;    // canonical patterns, one per depth
    std::optional<std::vector<std::uint64_t>> best;

    auto count_vector(std::uint64_t mask, const std::vector<Block>& blocks) const
        -> std::vector<int>
    {
        std::vector<int> counts;
        counts.reserve(blocks.size());
        for (const auto& blk : blocks)
            counts.push_back(std::popcount(mask & blk.columns));
        return counts;
    }

    // Cheapest arrangement of a row: inside every cell the zeros come first.
    auto pattern_of(const std::vector<int>& counts, const std::vector<Block>& blocks) const
        -> std::uint64_t
    {
        std::uint64_t pat = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            int size = std::popcount(blocks[b].columns);
            for (int p = size - counts[b]; p < size; ++p)
                pat |= std::uint64_t{1} << (blocks[b].start + p);
        }
        return pat;
    }

    auto refine(const std::vector<Block>& blocks, std::uint64_t mask) const -> std::vector<Block>
    {
        std::vector<Block> out;
        out.reserve(blocks.size() + 4);
        for (const auto& blk : blocks) {
            auto ones = blk.columns & mask;
            auto zeros = blk.columns & ~mask;
            if (ones == 0 || zeros == 0) {
                out.push_back(blk);
                continue;
            }
            out.push_back({blk.start, zeros});
            out.push_back({blk.start + std::popcount(zeros), ones});
        }
        return out;
    }

    auto multiplicity(std::uint64_t mask) const -> int
    {
        int k = 0;
        for (int r = 0; r < m; ++r)
            if (!used[r] && rows[r] == mask)
                ++k;
        return k;
    }

    auto descend(const std::vector<Block>& blocks, int depth) -> void
    {
        // Compare the emitted prefix against the current incumbent from
        // scratch: the incumbent may have changed since this branch forked.
        bool equal_prefix = false;
        if (best) {
            equal_prefix = true;
            for (int i = 0; i < depth; ++i) {
                auto mine = emitted[static_cast<std::size_t>(i)];
                auto theirs = (*best)[static_cast<std::size_t>(i)];
                if (mine == theirs)
                    continue;
                if (pattern_less(theirs, mine))
                    return;                          // prefix already lost
                equal_prefix = false;                // prefix already won
                break;
            }
        }

        if (depth == m) {
            if (!best || !equal_prefix)
                best = emitted;
            return;
        }

        std::vector<int> min_counts;
        std::vector<std::uint64_t> ties;
        for (int r = 0; r < m; ++r) {
            if (used[r])
                continue;
            auto counts = count_vector(rows[r], blocks);
            if (min_counts.empty() || counts < min_counts) {
                min_counts = std::move(counts);
                ties.assign(1, rows[r]);
            } else if (counts == min_counts
                       && std::find(ties.begin(), ties.end(), rows[r]) == ties.end()) {
                ties.push_back(rows[r]);
            }
        }

        auto pat = pattern_of(min_counts, blocks);
        if (equal_prefix && pattern_less((*best)[static_cast<std::size_t>(depth)], pat))
            return;                                  // every tie emits pat; all lose

        // Two tied masks of equal multiplicity differ on a column set that a
        // within-cell involution can swap; if every other unused row holds
        // none or all of those columns, the involution fixes it, so it maps
        // one branch's residual state onto the other's and exploring one
        // branch suffices.
        std::vector<std::uint64_t> explored;
        for (auto cand : ties) {
            bool skip = false;
            for (auto prev : explored) {
                if (multiplicity(prev) != multiplicity(cand))
                    continue;
                auto moved = prev ^ cand;
                bool touched = false;
                for (int r = 0; r < m && !touched; ++r) {
                    if (used[r] || rows[r] == prev || rows[r] == cand)
                        continue;
                    auto overlap = rows[r] & moved;
                    if (overlap != 0 && overlap != moved)
                        touched = true;
                }
                if (!touched) {
                    skip = true;
                    break;
                }
            }
            if (skip)
                continue;
            explored.push_back(cand);

            int chosen = -1;
            for (int r = 0; r < m; ++r)
                if (!used[r] && rows[r] == cand) {
                    chosen = r;
                    break;
                }
            used[static_cast<std::size_t>(chosen)] = 1;
            emitted.push_back(pat);
            descend(refine(blocks, cand), depth + 1);
            emitted.pop_back();
            used[static_cast<std::size_t>(chosen)] = 0;
        }
    }
};

} // namespace

auto canonical_key(const BiGraph& g) -> std::string
{
    if (g.m() > max_canonical_side || g.n() > max_canonical_side)
        throw std::invalid_argument("canonical form defined up to 24x24");

    Searcher s;
    s.m = g.m();
    s.n = g.n();
    s.rows = g.rows();
    s.used.assign(static_cast<std::size_t>(s.m), 0);

    std::vector<Block> blocks;
    if (s.n > 0)
        blocks.push_back({0, g.column_mask()});
    s.descend(blocks, 0);

    std::string key;
    key.push_back(static_cast<char>(g.m()));
    key.push_back(static_cast<char>(g.n()));
    const auto& mat = s.best ? *s.best : std::vector<std::uint64_t>{};
    for (auto pat : mat)
        for (int byte = 0; byte * 8 < s.n; ++byte)
            key.push_back(static_cast<char>((pat >> (8 * byte)) & 0xff));
    return key;
}

} // namespace bramsey
