#pragma once

#include <map>
#include <string>
#include <vector>

#include "bramsey/zarankiewicz.hpp"

// Machine-checked replay of the counting argument that no 3-coloring of the
// 17 x 17 board keeps two colors K_{2,2}-free and the third K_{3,3}-free.
// The argument is stored as data: every step records its operands and is
// re-evaluated against the z-table supplied at replay time, so swapping the
// table re-validates the whole derivation or shows exactly where it breaks.
// Nothing in this module concludes "infeasible" from anything but a ledger
// whose every case ends in a step chain that holds.

namespace bramsey {

enum class Rel { lt, le, eq, gt, ge };

auto to_string(Rel r) -> std::string;

// One recorded inequality.  `holds` is computed from the operands at
// construction, never assigned by a caller.  `assumed` marks structural
// steps (relabelings, "without loss" choices) that carry no arithmetic.
// `strictness_flag` marks a comparison that separates the two refutation
// conventions: it holds read non-strictly and fails read strictly.
struct ArithStep {
    std::string label;
    long long lhs = 0;
    Rel rel = Rel::eq;
    long long rhs = 0;
    bool holds = false;
    bool assumed = false;
    bool strictness_flag = false;

    static auto check(std::string label, long long lhs, Rel rel, long long rhs,
                      bool strictness_flag = false) -> ArithStep;
    static auto assume(std::string label) -> ArithStep;
};

struct StepChain {
    std::vector<ArithStep> steps;

    // append and report whether the appended comparison holds
    auto check(std::string label, long long lhs, Rel rel, long long rhs,
               bool strictness_flag = false) -> bool;
    auto assume(std::string label) -> void;

    auto valid() const -> bool;   // every step holds (assumed steps do)
};

// A case split: every case is either refuted by a chain that holds or listed
// as a survivor.  Chains that were attempted but fail stay in `refutations`
// for audit; such a case is still a survivor.  `preamble` holds derivations
// shared by all cases.
struct CaseLedger {
    std::string description;
    StepChain preamble;
    std::vector<std::string> cases;                  // declaration order
    std::map<std::string, StepChain> refutations;
    std::vector<std::string> survivors;

    auto refuted(const std::string& case_id) const -> bool;
    auto complete() const -> bool;   // valid preamble, every case refuted
};

// Whether refuting an edge count E against a cap z requires E > z (strict,
// the convention the z-table documents) or E >= z.
enum class Convention { strict, nonstrict };

auto to_string(Convention c) -> std::string;

enum class Conclusion { infeasible, feasible_not_refuted };

auto to_string(Conclusion c) -> std::string;

// Outcome of a full replay.  `infeasible` is only reached when every ledger
// is complete and no required table entry is missing; anything else stops
// with `stopped_at` naming the stage that failed to close.  `flags` records
// convention caveats, one entry per surfaced gap.
struct ReplayVerdict {
    Conclusion conclusion = Conclusion::feasible_not_refuted;
    std::vector<CaseLedger> ledgers;
    std::vector<std::string> flags;
    std::string stopped_at;
    std::vector<std::string> missing_entries;
};

// --- stage operations ---------------------------------------------------

// Edge totals of the three color classes on the b x b board, for biclique
// sizes {s, s, g}.  The two same-size classes are "the pair"; the third is
// "green".  green_lower comes from the board total minus twice the pair
// cap, green_upper from the green cap; tight means the interval is one
// point, pair_tight that the leftover splits as exactly twice the pair cap
// (pinning both pair classes to side_edges each).
// Throws std::invalid_argument unless sizes is {s, s, g} with s == s.
struct ColorBalance {
    int total = 0;
    int green_lower = 0;
    int green_upper = 0;
    bool feasible = false;
    bool tight = false;
    bool pair_tight = false;
    int side_edges = 0;
    StepChain steps;
    std::vector<std::string> missing;
};

auto fix_color_class_sizes(int b, const std::vector<int>& sizes,
                           const ZTable& table) -> ColorBalance;

// Least green row degree d whose removal argument fires: deleting a degree-d
// row leaves green at most E - d, so the (b-1) x b complement holds at least
// (b-1)*b - (E - d) edges and one pair class at least half of that, compared
// against the pair cap z(b-1, b, s).  The two conventions can disagree on
// the least such d; both are reported and strictness_flag is set when they
// differ.  max_degree is the bound under the requested convention (b when
// no degree is refutable).  Requires a tight green interval; throws
// std::invalid_argument otherwise.
struct DeltaBound {
    int green_edges = 0;
    int least_refuted_strict = 0;      // 0 when no degree fires
    int least_refuted_nonstrict = 0;
    int max_degree = 0;
    bool strictness_flag = false;
    StepChain steps;
    std::vector<std::string> missing;
};

auto delta_bound_step(int b, const std::vector<int>& sizes,
                      const ZTable& table, Convention convention) -> DeltaBound;

// All non-increasing sequences of b values in [0, dmax] summing to edges,
// in descending lexicographic order, each produced exactly once.  Empty
// when no such sequence exists.
auto enumerate_degree_multisets(int b, int edges, int dmax)
    -> std::vector<std::vector<int>>;

// Run-length form used as the case identifier for a multiset, e.g.
// "9^5 8^12" for five nines followed by twelve eights.
auto multiset_label(const std::vector<int>& degrees) -> std::string;

// Try to refute a green row degree multiset: for each prefix of the sorted
// degrees, the k fullest rows must fit inside a k x n_cols board, so their
// sum strictly above z(k, n_cols, t).ub refutes (smallest k wins); failing
// that, a total below required_edges refutes.  The returned chain holds the
// single decisive step; a survivor returns an empty chain.
struct MultisetVerdict {
    bool refuted = false;
    StepChain chain;
};

auto refute_degree_multiset(std::vector<int> degrees, int n_cols, int t,
                            const ZTable& table, long long required_edges)
    -> MultisetVerdict;

// Largest number of columns two rows of degree deg_x may share when every
// shared column must reach degree_floor: the two rows give a shared column
// 2 marks, the other b - 2 rows at most t - 1 each, so s shared columns
// receive at most 2s + (b-2)(t-1) marks against a demand of s*degree_floor.
// `refutation` is the chain ruling out cap + 1; `at_cap` shows the supply
// meeting the demand at cap, with an equality step when the fit is exact
// (pinning every shared column at the floor and every other row at t - 1).
struct IntersectionCap {
    int cap = 0;
    StepChain refutation;
    StepChain at_cap;
};

auto intersection_cap(int deg_x, int b, int t, int degree_floor)
    -> IntersectionCap;

// Interval for the shared-neighbor total of a full row: the sum, over the
// deg_x columns the row meets, of their degrees.  dmin > 0 forces the total
// to at least deg_x * dmin; the upper chain refutes one more than
// max(dmax + (deg_x-1)(dmax-1), deg_x + (b-1)(cap-1)) by forcing a second
// full column and a row at the shared-column cap, then pinning everything
// down to a forbidden 3 x 3 grid.  When the upper chain does not close the
// returned upper falls back to deg_x * dmax; dmin <= 0 yields [0, deg_x*b]
// with empty chains.
struct SumBounds {
    int lower = 0;
    int upper = 0;
    StepChain below;    // refutes totals under lower
    StepChain above;    // refutes totals over upper
};

auto intersection_sum_bounds(int b, int deg_x, int dmax, int dmin, int cap)
    -> SumBounds;

// Case analysis eliminating a shared-neighbor total of exactly n_value for
// the pinned 17-per-side green profile (full rows of degree 9, floor 8,
// shared-column cap 5, 141 edges); b supplies the row counts.  n_value must
// be 72 or 73, the two survivors of intersection_sum_bounds; anything else
// throws std::invalid_argument.
auto refute_intersection_sum(int n_value, int b) -> CaseLedger;

// The full pipeline: color-class totals, the degree-10 removal step, the
// degree-multiset ledger, the shared-column cap, the shared-neighbor
// interval, and the two interval endpoints.  Infeasible only when every
// stage closes under the requested convention with no missing table entry.
auto replay_b223(const ZTable& table, Convention convention) -> ReplayVerdict;

// One-step coarse bound: the two pair caps and the green cap together fall
// short of the b x b board, so some color must contain its biclique.
struct CoarseUpper {
    int b = 0;
    bool holds = false;
    StepChain steps;
    std::vector<std::string> missing;
};

auto replay_coarse_upper(int b, const std::vector<int>& sizes,
                         const ZTable& table) -> CoarseUpper;

// The b = 18 instance of the coarse bound with sizes {2, 2, 3}.
auto replay_upper18(const ZTable& table) -> CoarseUpper;

} // namespace bramsey
