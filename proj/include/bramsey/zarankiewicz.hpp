#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bramsey/bigraph.hpp"

// Zarankiewicz numbers z(m,n,t): the maximum number of edges of a subgraph
// of K_{m,n} containing no K_{t,t}.  Convention note: refuting an edge count
// E against z requires E strictly greater than z; every consumer of these
// bounds states which side of that line it stands on.

namespace bramsey {

enum class Provenance { paper, computed_exact, counting_bound, witness_search };

auto to_string(Provenance p) -> std::string;
auto parse_provenance(const std::string& token) -> std::optional<Provenance>;

// Best known bracket lb <= z(m,n,t) <= ub.  lb is witness-backed knowledge,
// ub is counting or search knowledge; computed_exact means lb == ub was
// certified by a completed search.
struct ZRecord {
    int m = 0, n = 0, t = 0;
    long long lb = 0, ub = 0;
    Provenance provenance = Provenance::counting_bound;

    friend auto operator==(const ZRecord&, const ZRecord&) -> bool = default;
};

// Records keyed by (m, n, t), stored with m <= n (z is symmetric in m, n).
// Value type: copy for a snapshot; concurrent use is one writer or any
// number of readers of distinct copies.
class ZTable {
public:
    // replaces any record with the same normalized key; validates ZRecord
    // invariants (positive dims, 0 <= lb <= ub <= m*n, exactness)
    auto insert(ZRecord rec) -> void;

    // exact normalized-key lookup; no tightening, no closure
    auto find(int m, int n, int t) const -> const ZRecord*;

    auto records() const -> const std::vector<ZRecord>&;   // sorted by key
    auto size() const -> std::size_t { return recs_.size(); }

    // the values this artifact ships with
    static auto builtin() -> const ZTable&;

private:
    std::vector<ZRecord> recs_;
};

// Text format, one record per line: `m n t lb ub provenance` with provenance
// in {paper, computed-exact, counting-bound, witness-search}; `#` starts a
// comment.  Malformed or duplicate lines abort with the line number.
auto load_ztable(std::istream& in) -> ZTable;
auto load_ztable_file(const std::string& path) -> ZTable;
auto save_ztable(const ZTable& table, std::ostream& out) -> void;

// Largest E such that some row-degree multiset d_1..d_m with all d_i <= n
// and sum E keeps the t-subset coverage count sum(C(d_i, t)) within the
// K_{t,t}-free capacity (t-1)*C(n, t).  Always >= z(m,n,t); equals m*n when
// t > min(m,n).  Computed by raising degrees level by level, cheapest
// marginal cost first (the cost C(d,t) is convex in d, so the even spread
// is optimal).
auto kst_upper_bound(int m, int n, int t) -> long long;

// Stored knowledge tightened by symmetry, componentwise monotonicity of z,
// the kst bound, and the m*n cap; absent keys yield [0, counting bound].
// Never weaker than the stored record.  A table that fails verify_table can
// produce lb > ub here; this function does not re-validate.
auto z_lookup(const ZTable& table, int m, int n, int t) -> ZRecord;

struct TableReport {
    std::vector<std::string> violations;
    auto ok() const -> bool { return violations.empty(); }
};

// Internal-consistency sweep: per-record invariants, ub within the kst
// bound, lb = ub = m*n whenever t > min(m,n), and cross-record monotonicity
// (lb of a componentwise-smaller key never exceeds ub of a larger one).
// Violations are report content, not exceptions.
auto verify_table(const ZTable& table) -> TableReport;

// Branch and bound over rows in non-increasing (degree, mask) order; the
// exact optimum when the tree is exhausted within budget, otherwise the best
// witness found with a counting upper bound.  budget counts attempted row
// placements.  An optional table tightens the upper bound reported on
// budget exhaustion; the search itself stops early only against its own
// counting ceiling, so a wrong table cannot fake exactness.
// Throws: budget < 1; t < 1; m or n negative or above the 64-column cap.
// The result is keyed with m <= n.
auto z_exact(int m, int n, int t, long long budget,
             const ZTable* table = nullptr) -> ZRecord;

// Search for a K_{t,t}-free subgraph of K_{m,n} with at least target edges.
// impossible is a completed-tree certificate, budget_exhausted is not; any
// returned graph has been re-checked against has_biclique.
struct WitnessOutcome {
    enum class Kind { found, impossible, budget_exhausted };
    Kind kind = Kind::impossible;
    std::optional<BiGraph> graph;
    long long nodes = 0;
};

auto extremal_witness(int m, int n, int t, long long target,
                      long long budget) -> WitnessOutcome;

} // namespace bramsey
