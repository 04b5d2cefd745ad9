#include "bramsey/replay.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bramsey {

namespace {

auto str(long long v) -> std::string { return std::to_string(v); }

auto rel_holds(long long lhs, Rel rel, long long rhs) -> bool {
    switch (rel) {
        case Rel::lt: return lhs < rhs;
        case Rel::le: return lhs <= rhs;
        case Rel::eq: return lhs == rhs;
        case Rel::gt: return lhs > rhs;
        case Rel::ge: return lhs >= rhs;
    }
    return false;
}

auto key_string(int m, int n, int t) -> std::string {
    if (m > n) std::swap(m, n);
    return "z(" + str(m) + "," + str(n) + "," + str(t) + ")";
}

// A lookup key counts as covered when some stored record bounds it from
// above through monotonicity, or when the grid value is exact anyway
// (t = 1 or t past the smaller side).  Everything else is a missing entry:
// the closure would answer with a pure counting bound.
auto covered_from_above(const ZTable& table, int m, int n, int t) -> bool {
    if (m > n) std::swap(m, n);
    if (t <= 1 || t > m) return true;
    for (const auto& r : table.records())
        if (r.t == t && r.m >= m && r.n >= n) return true;
    return false;
}

auto note_missing(std::vector<std::string>& out, const ZTable& table,
                  int m, int n, int t) -> void {
    if (covered_from_above(table, m, n, t)) return;
    auto key = key_string(m, n, t);
    if (std::find(out.begin(), out.end(), key) == out.end())
        out.push_back(std::move(key));
}

auto record_case(CaseLedger& led, std::string id, StepChain chain) -> void {
    led.cases.push_back(id);
    const bool ok = !chain.steps.empty() && chain.valid();
    led.refutations.emplace(id, std::move(chain));
    if (!ok) led.survivors.push_back(std::move(id));
}

auto record_survivor(CaseLedger& led, std::string id) -> void {
    led.cases.push_back(id);
    led.survivors.push_back(std::move(id));
}

// Degree profile the pipeline establishes for the 17-per-side green class;
// the recorded case analyses below are written against these values.
constexpr int kDegX = 9;       // full-row degree, both sides
constexpr int kDMin = 8;       // degree floor
constexpr int kDMax = 9;
constexpr int kCap = 5;        // columns two full rows may share
constexpr int kFullRows = 5;   // rows at kDMax per side
constexpr long long kEdges = 141;
constexpr long long kCeiling = 73;   // largest shared-neighbor total left standing

// Two rows at the cap supply their shared columns 2 marks each; every other
// row at most two (the pair bound below a K_{3,3}).  Meeting the floor
// demand exactly pins the shared columns at the floor and every other row
// at exactly two marks inside the cap set.  The case chains lean on that
// exactness, so each one re-states it.
auto cap_equality_step(StepChain& ch, int b) -> void {
    ch.check("the cap supply equality pins each cap set at the floor and every "
             "other row at exactly two marks inside it",
             2LL * kCap + static_cast<long long>(b - 2) * 2, Rel::eq,
             static_cast<long long>(kCap) * kDMin);
}

auto refute_sum_73(int b) -> CaseLedger {
    CaseLedger led;
    led.description =
        "shared-neighbor total 73 for a full green row: C collects the other "
        "rows meeting its nine columns at the five-column cap";
    led.preamble.assume("fix a full row x1 and relabel its nine green columns "
                        "as the shared set Y1");
    led.preamble.check("a 73 total over nine columns with floor 8 leaves "
                       "exactly one full column",
                       73LL - static_cast<long long>(kDegX) * kDMin, Rel::eq, 1);

    {
        StepChain ch;
        ch.assume("relabel two rows of C so their cap sets are Y2 = {y1..y5} "
                  "and Y3 = {y1,y2,y6,y7,y8}");
        cap_equality_step(ch, b);
        ch.check("a third cap row holds two exact marks in each set, leaving "
                 "one for the single column outside them",
                 static_cast<long long>(kCap) - 2 - 2, Rel::eq,
                 static_cast<long long>(kDegX) - (2 * kCap - 2));
        ch.check("so all nine shared columns lie in floor-pinned cap sets",
                 (2LL * kCap - 2) + 1, Rel::eq, kDegX);
        ch.check("nine floor columns total 72, not 73",
                 static_cast<long long>(kDegX) * kDMin, Rel::lt, 73);
        record_case(led, "|C| >= 3", std::move(ch));
    }
    {
        StepChain ch;
        ch.check("the sixteen other rows, at four marks or fewer, must carry "
                 "the remaining 64 exactly",
                 73LL - kDegX, Rel::eq,
                 static_cast<long long>(b - 1) * (kCap - 1));
        ch.check("the outer eight columns hold the leftover green edges as "
                 "four full and four floor columns",
                 kEdges - 73, Rel::eq, 4LL * kDMax + 4 * kDMin);
        ch.assume("B names the four full outer columns; each full row besides "
                  "x1 meets Y1 four times and the outer columns five times");
        ch.check("a full row with at most one mark in B fills the other four "
                 "outer columns",
                 5LL - 1, Rel::ge, 8 - 4);
        ch.check("all four full rows doing so stack three deep on those "
                 "columns, a forbidden grid, so some full row holds two marks "
                 "in B",
                 kFullRows - 1, Rel::ge, 3);
        const long long outer = 2LL * kDMax + 3 * kDMin;
        const long long inner = 4LL * kDMin;
        ch.check("two full and three floor outer columns under that row",
                 outer, Rel::eq, 42);
        ch.check("its four floor marks inside the shared set",
                 inner, Rel::eq, 32);
        ch.check("so its own shared-neighbor total reaches 42 + 32",
                 outer + inner, Rel::ge, 74);
        ch.check("past the 73 ceiling", outer + inner, Rel::gt, kCeiling);
        record_case(led, "|C| = 0", std::move(ch));
    }
    {
        StepChain ch;
        ch.assume("relabel the cap row x2 and its cap set Y2 = {y1..y5}");
        cap_equality_step(ch, b);
        ch.check("the one full column finds its place among the four columns "
                 "outside the floor-pinned cap set; relabel it y6",
                 1, Rel::le, static_cast<long long>(kDegX) - kCap);
        ch.check("the fifteen remaining rows carry 59 of a possible 60, one "
                 "row one mark short of four",
                 static_cast<long long>(b - 2) * (kCap - 1) - (73 - kDegX - kCap),
                 Rel::eq, 1);
        ch.check("the full column meets eight rows besides x1, at most one of "
                 "them the short row",
                 static_cast<long long>(kDMax) - 1 - 1, Rel::ge, 7);
        ch.check("each of those seven spends two exact marks on the cap set "
                 "and one on the full column, keeping one for the last three "
                 "columns",
                 static_cast<long long>(kCap - 1) - 2 - 1, Rel::eq, 1);
        ch.check("seven kept marks over three columns put three rows on one "
                 "column",
                 (7 + (kDegX - kCap - 1) - 1) / (kDegX - kCap - 1), Rel::ge, 3);
        ch.check("three rows with two exact cap-set marks each must share a "
                 "cap-set column, closing a grid on x1, the two sharing rows, "
                 "and the shared, full, and crowded columns",
                 3LL * 2, Rel::gt, kCap);
        record_case(led, "|C| = 1", std::move(ch));
    }
    {
        StepChain ch;
        ch.assume("relabel the cap rows x2, x3 with cap sets Y2 = {y1..y5} "
                  "and Y3 = {y1,y2,y6,y7,y8}");
        cap_equality_step(ch, b);
        ch.check("the two cap sets overlap twice and cover eight columns",
                 2LL * kCap - 2, Rel::eq, 8);
        ch.check("those sit at the floor, so the ninth column y9 is the full "
                 "one",
                 static_cast<long long>(kDegX) - (2 * kCap - 2), Rel::eq, 1);
        ch.check("the fourteen plain rows carry 54 of a possible 56, two "
                 "marks short",
                 static_cast<long long>(b - 3) * (kCap - 1) - (73 - kDegX - 2 * kCap),
                 Rel::eq, 2);
        ch.check("if the short rows avoid y9 it keeps at least seven rows of "
                 "exactly four marks besides x1",
                 static_cast<long long>(kDMax) - 1 - 1, Rel::ge, 7);
        ch.check("if instead both short marks sit on y9, each short row's "
                 "other two marks are its exact cap-set pair, clearing y6, "
                 "y7, y8; any of those floor columns keeps seven clean rows",
                 static_cast<long long>(kDMin) - 1, Rel::ge, 7);
        ch.check("either way each of seven rows spends two exact marks on Y2 "
                 "and one on the chosen column, keeping at least one for the "
                 "remaining three",
                 static_cast<long long>(kCap - 1) - 2 - 1, Rel::ge, 1);
        ch.check("seven kept marks over three columns put three rows together",
                 (7 + (kDegX - kCap - 1) - 1) / (kDegX - kCap - 1), Rel::ge, 3);
        ch.check("three rows with two exact Y2 marks each must share a Y2 "
                 "column, closing the grid",
                 3LL * 2, Rel::gt, kCap);
        record_case(led, "|C| = 2", std::move(ch));
    }
    return led;
}

auto refute_sum_72(int b) -> CaseLedger {
    CaseLedger led;
    led.description =
        "shared-neighbor total 72 for a full green row: every shared column "
        "sits at the floor; D collects the other rows at the five-column cap, "
        "E the rows at three marks (the recorded chain opens by repeating the "
        "73 figure; its arithmetic, replayed here, uses 72 throughout)";
    led.preamble.assume("fix a full row x1 and relabel its nine green columns "
                        "as the shared set Y1");
    led.preamble.check("a 72 total over nine columns between floor and full "
                       "pins each at the floor",
                       72, Rel::eq, static_cast<long long>(kDegX) * kDMin);

    {
        StepChain ch;
        ch.assume("relabel cap rows so two of the cap sets are Y2 = {y1..y5} "
                  "and Y3 = {y1,y2,y6,y7,y8}");
        cap_equality_step(ch, b);
        ch.check("the cap sets overlap twice, covering eight columns and "
                 "leaving y9",
                 static_cast<long long>(kDegX) - (2 * kCap - 2), Rel::eq, 1);
        ch.check("two further cap rows each hold two exact marks per set and "
                 "one on y9, with none to spare for the shared pair",
                 2LL + 2 + 1, Rel::eq, kCap);
        ch.check("their pairs inside Y2 alone draw from three columns and "
                 "must share one",
                 2LL + 2, Rel::gt, 3);
        ch.check("their pairs inside Y3 alone likewise",
                 2LL + 2, Rel::gt, 3);
        ch.check("with y9 the two rows and x1 hold three common columns, a "
                 "forbidden grid",
                 1LL + 1 + 1, Rel::ge, 3);
        record_case(led, "|D| >= 4", std::move(ch));
    }
    {
        StepChain ch;
        ch.check("sixteen rows at four marks or fewer carry 63, a single "
                 "mark short",
                 static_cast<long long>(b - 1) * (kCap - 1) - (72 - kDegX),
                 Rel::eq, 1);
        ch.check("the outer eight columns hold the leftover green edges as "
                 "five full and three floor columns",
                 kEdges - 72, Rel::eq, 5LL * kDMax + 3 * kDMin);
        ch.assume("B names the five full outer columns; each full row besides "
                  "x1 meets the outer columns five or six times");
        ch.check("a full row with at most two marks in B fills the three "
                 "other outer columns",
                 5LL - 2, Rel::ge, 8 - 5);
        ch.check("all four full rows doing so stack three deep, a forbidden "
                 "grid, so some full row holds three marks in B",
                 kFullRows - 1, Rel::ge, 3);
        const long long outer = 3LL * kDMax + 2 * kDMin;
        const long long inner = 4LL * kDMin;
        ch.check("three full and two floor outer columns under that row",
                 outer, Rel::eq, 43);
        ch.check("its four floor marks inside the shared set",
                 inner, Rel::eq, 32);
        ch.check("so its shared-neighbor total reaches 43 + 32",
                 outer + inner, Rel::ge, 75);
        ch.check("had that row been the short one, three floor marks inside "
                 "and six outer columns still reach 75",
                 3LL * kDMin + (3LL * kDMax + 3 * kDMin), Rel::ge, 75);
        ch.check("past the 73 ceiling", outer + inner, Rel::gt, kCeiling);
        record_case(led, "|D| = 0", std::move(ch));
    }
    for (int dd = 1; dd <= 2; ++dd) {
        StepChain ch;
        if (dd == 1)
            ch.assume("relabel the cap row x2 and its cap set Y2 = {y1..y5}");
        else
            ch.assume("relabel the cap rows x2, x2' and take Y2 = {y1..y5} as "
                      "the first cap set");
        cap_equality_step(ch, b);
        const long long deficit =
            static_cast<long long>(b - 1 - dd) * (kCap - 1) + dd * kCap -
            (72 - kDegX);
        ch.check("the rows besides x1 fall " + str(dd + 1) + " marks short of "
                 "their per-row caps, so E holds " + str(dd + 1) + " three-mark "
                 "rows",
                 deficit, Rel::eq, dd + 1);
        ch.check("each E row's single non-cap-set mark leaves some outer "
                 "shared column untouched",
                 dd + 1, Rel::lt, kDegX - kCap);
        ch.assume("relabel an untouched outer shared column y6");
        ch.check("y6 keeps seven rows besides x1, none short, each with at "
                 "least four marks",
                 static_cast<long long>(kDMin) - 1, Rel::ge, 7);
        ch.check("each spends two exact marks on the cap set and one on y6, "
                 "keeping at least one for the last three columns",
                 static_cast<long long>(kCap - 1) - 2 - 1, Rel::ge, 1);
        ch.check("seven kept marks over three columns put three rows on one "
                 "column",
                 (7 + (kDegX - kCap - 1) - 1) / (kDegX - kCap - 1), Rel::ge, 3);
        ch.check("three rows with two exact cap-set marks each must share a "
                 "cap-set column, closing the grid",
                 3LL * 2, Rel::gt, kCap);
        record_case(led, "|D| = " + str(dd), std::move(ch));
    }
    {
        StepChain ch;
        ch.assume("relabel the cap rows x2, x3, x4; their exact overlaps "
                  "force cap sets Y2 = {y1..y5}, Y3 = {y1,y2,y6,y7,y8}, "
                  "Y4 = {y3,y4,y6,y7,y9}");
        cap_equality_step(ch, b);
        ch.check("the third cap row spends two exact marks per earlier set "
                 "and its last on y9",
                 2LL + 2 + 1, Rel::eq, kCap);
        ch.check("the thirteen plain rows carry 48 of a possible 52, so E "
                 "holds four three-mark rows",
                 static_cast<long long>(b - 1 - 3) * (kCap - 1) -
                     (72 - kDegX - 3 * kCap),
                 Rel::eq, 4);
        ch.check("a short row on y9 would keep two exact marks for Y2",
                 3LL - 1, Rel::eq, 2);
        ch.check("both on the shared pair leaves its Y4 overlap at one, not "
                 "two",
                 1, Rel::lt, 2);
        ch.check("otherwise its Y3 overlap stays at one, not two; either way "
                 "no short row meets y9",
                 1, Rel::lt, 2);
        ch.check("so y9 keeps seven rows besides x1, none short, each with at "
                 "least four marks",
                 static_cast<long long>(kDMin) - 1, Rel::ge, 7);
        ch.check("each spends two exact marks on Y2 and one on y9, keeping at "
                 "least one for y6, y7, y8",
                 static_cast<long long>(kCap - 1) - 2 - 1, Rel::ge, 1);
        ch.check("seven kept marks over three columns put three rows together",
                 (7 + (kDegX - kCap - 1) - 1) / (kDegX - kCap - 1), Rel::ge, 3);
        ch.check("three rows with two exact Y2 marks each must share a Y2 "
                 "column, closing the grid",
                 3LL * 2, Rel::gt, kCap);
        record_case(led, "|D| = 3", std::move(ch));
    }
    return led;
}

} // namespace

auto to_string(Rel r) -> std::string {
    switch (r) {
        case Rel::lt: return "<";
        case Rel::le: return "<=";
        case Rel::eq: return "=";
        case Rel::gt: return ">";
        case Rel::ge: return ">=";
    }
    return "?";
}

auto to_string(Convention c) -> std::string {
    return c == Convention::strict ? "strict" : "nonstrict";
}

auto to_string(Conclusion c) -> std::string {
    return c == Conclusion::infeasible ? "infeasible" : "feasible-not-refuted";
}

auto ArithStep::check(std::string label, long long lhs, Rel rel, long long rhs,
                      bool strictness_flag) -> ArithStep {
    ArithStep s;
    s.label = std::move(label);
    s.lhs = lhs;
    s.rel = rel;
    s.rhs = rhs;
    s.holds = rel_holds(lhs, rel, rhs);
    s.strictness_flag = strictness_flag;
    return s;
}

auto ArithStep::assume(std::string label) -> ArithStep {
    ArithStep s;
    s.label = std::move(label);
    s.holds = true;
    s.assumed = true;
    return s;
}

auto StepChain::check(std::string label, long long lhs, Rel rel, long long rhs,
                      bool strictness_flag) -> bool {
    steps.push_back(ArithStep::check(std::move(label), lhs, rel, rhs,
                                     strictness_flag));
    return steps.back().holds;
}

auto StepChain::assume(std::string label) -> void {
    steps.push_back(ArithStep::assume(std::move(label)));
}

auto StepChain::valid() const -> bool {
    return std::all_of(steps.begin(), steps.end(),
                       [](const ArithStep& s) { return s.holds; });
}

auto CaseLedger::refuted(const std::string& case_id) const -> bool {
    auto it = refutations.find(case_id);
    return it != refutations.end() && !it->second.steps.empty() &&
           it->second.valid();
}

auto CaseLedger::complete() const -> bool {
    if (!preamble.valid() || !survivors.empty()) return false;
    return std::all_of(cases.begin(), cases.end(),
                       [&](const std::string& c) { return refuted(c); });
}

auto fix_color_class_sizes(int b, const std::vector<int>& sizes,
                           const ZTable& table) -> ColorBalance {
    if (b < 1) throw std::invalid_argument("board side must be positive");
    if (sizes.size() != 3 || sizes[0] != sizes[1] || sizes[0] < 1 || sizes[2] < 1)
        throw std::invalid_argument("expected biclique sizes {s, s, g}");
    const int s = sizes[0];
    const int g = sizes[2];

    ColorBalance out;
    out.total = b * b;
    const long long zs = z_lookup(table, b, b, s).ub;
    const long long zg = z_lookup(table, b, b, g).ub;
    note_missing(out.missing, table, b, b, s);
    note_missing(out.missing, table, b, b, g);

    const long long cover = 2 * zs + zg;
    if (cover < out.total) {
        out.steps.check("the two pair caps and the green cap cannot cover the "
                        "board",
                        cover, Rel::lt, out.total);
        out.green_lower = static_cast<int>(std::max(0LL, out.total - 2 * zs));
        out.green_upper = static_cast<int>(std::min<long long>(zg, out.total));
        return out;
    }
    out.feasible = true;
    out.steps.check("the two pair caps and the green cap cover the board",
                    cover, Rel::ge, out.total);
    out.green_lower = static_cast<int>(std::max(0LL, out.total - 2 * zs));
    out.green_upper = static_cast<int>(std::min<long long>(zg, out.total));
    if (out.green_lower > 0) {
        const long long push = (out.total - (out.green_lower - 1) + 1) / 2;
        out.steps.check("one green edge under the floor pushes a pair class "
                        "past its cap",
                        push, Rel::gt, zs);
    }
    out.tight = out.green_lower == out.green_upper;
    if (out.tight && out.total - out.green_upper == 2 * zs) {
        out.steps.check("the board minus the green class leaves the pair "
                        "classes exactly twice their cap",
                        out.total - out.green_upper, Rel::eq, 2 * zs);
        out.pair_tight = true;
        out.side_edges = static_cast<int>(zs);
    }
    return out;
}

auto delta_bound_step(int b, const std::vector<int>& sizes,
                      const ZTable& table, Convention convention) -> DeltaBound {
    const auto bal = fix_color_class_sizes(b, sizes, table);
    if (!bal.feasible || !bal.tight)
        throw std::invalid_argument("the degree bound needs a pinned green "
                                    "edge total");
    DeltaBound out;
    out.green_edges = bal.green_upper;
    const long long zpair = z_lookup(table, b - 1, b, sizes[0]).ub;
    note_missing(out.missing, table, b - 1, b, sizes[0]);
    const long long board2 = static_cast<long long>(b - 1) * b;
    const auto pair_load = [&](int d) {
        return (board2 - (out.green_edges - d) + 1) / 2;
    };
    for (int d = 1; d <= b; ++d) {
        if (out.least_refuted_nonstrict == 0 && pair_load(d) >= zpair)
            out.least_refuted_nonstrict = d;
        if (out.least_refuted_strict == 0 && pair_load(d) > zpair)
            out.least_refuted_strict = d;
    }
    out.strictness_flag =
        out.least_refuted_strict != out.least_refuted_nonstrict;
    const int least = convention == Convention::strict
                          ? out.least_refuted_strict
                          : out.least_refuted_nonstrict;
    out.max_degree = least == 0 ? b : least - 1;

    const int dc = out.least_refuted_nonstrict != 0
                       ? out.least_refuted_nonstrict
                       : b;
    const bool flagged = pair_load(dc) >= zpair && !(pair_load(dc) > zpair);
    const Rel rel = convention == Convention::strict ? Rel::gt : Rel::ge;
    out.steps.check("deleting a green row of degree " + str(dc) + " leaves " +
                        str(out.green_edges - dc) + " green edges, whose " +
                        str(b - 1) + " x " + str(b) + " complement pushes one "
                        "pair class to " + str(pair_load(dc)) +
                        " against the pair cap",
                    pair_load(dc), rel, zpair, flagged);
    if (out.least_refuted_strict != 0 &&
        out.least_refuted_strict != out.least_refuted_nonstrict)
        out.steps.check("read strictly, the removal argument first fires at "
                        "degree " + str(out.least_refuted_strict),
                        pair_load(out.least_refuted_strict), Rel::gt, zpair);
    return out;
}

auto enumerate_degree_multisets(int b, int edges, int dmax)
    -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    if (b < 0 || edges < 0 || dmax < 0) return out;
    if (edges > static_cast<long long>(b) * dmax) return out;
    std::vector<int> cur;
    cur.reserve(b);
    const auto descend = [&](auto&& self, int slots, int sum, int hi) -> void {
        if (slots == 0) {
            if (sum == 0) out.push_back(cur);
            return;
        }
        const int low = (sum + slots - 1) / slots;   // the rest fits only if v >= sum/slots
        for (int v = std::min(hi, sum); v >= low; --v) {
            cur.push_back(v);
            self(self, slots - 1, sum - v, v);
            cur.pop_back();
        }
    };
    descend(descend, b, edges, dmax);
    return out;
}

auto multiset_label(const std::vector<int>& degrees) -> std::string {
    if (degrees.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < degrees.size();) {
        std::size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        if (!out.empty()) out += ' ';
        out += str(degrees[i]) + "^" + str(static_cast<long long>(j - i));
        i = j;
    }
    return out;
}

auto refute_degree_multiset(std::vector<int> degrees, int n_cols, int t,
                            const ZTable& table, long long required_edges)
    -> MultisetVerdict {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    MultisetVerdict v;
    long long prefix = 0;
    for (std::size_t k = 1; k <= degrees.size(); ++k) {
        prefix += degrees[k - 1];
        const long long cap =
            z_lookup(table, static_cast<int>(k), n_cols, t).ub;
        if (prefix > cap) {
            v.refuted = true;
            v.chain.check("the " + str(static_cast<long long>(k)) +
                              " fullest rows overfill a " +
                              str(static_cast<long long>(k)) + " x " +
                              str(n_cols) + " board",
                          prefix, Rel::gt, cap);
            return v;
        }
    }
    if (prefix < required_edges) {
        v.refuted = true;
        v.chain.check("the whole multiset falls short of the required edge "
                      "total",
                      prefix, Rel::lt, required_edges);
    }
    return v;
}

auto intersection_cap(int deg_x, int b, int t, int degree_floor)
    -> IntersectionCap {
    if (deg_x < 0 || b < 2 || t < 1 || degree_floor < 0)
        throw std::invalid_argument("intersection cap needs deg_x >= 0, "
                                    "b >= 2, t >= 1, floor >= 0");
    const long long pool = static_cast<long long>(b - 2) * (t - 1);
    const auto supply = [&](long long s) { return 2 * s + pool; };
    const auto demand = [&](long long s) {
        return s * static_cast<long long>(degree_floor);
    };
    IntersectionCap out;
    // supply - demand is affine in s, so the surviving counts form a prefix
    int cap = 0;
    for (int s = 0; s <= deg_x; ++s) {
        if (supply(s) >= demand(s)) cap = s;
        else break;
    }
    out.cap = cap;
    if (cap < deg_x) {
        const int s = cap + 1;
        out.refutation.check("rows sharing " + str(s) + " columns supply " +
                                 str(supply(s)) + " marks, under the " +
                                 str(demand(s)) + " the floor demands",
                             supply(s), Rel::lt, demand(s));
    } else {
        out.refutation.check("two rows of degree " + str(deg_x) +
                                 " cannot share " + str(deg_x + 1) + " columns",
                             deg_x + 1, Rel::gt, deg_x);
    }
    out.at_cap.check("at " + str(cap) + " shared columns the supply meets the "
                         "floor demand",
                     supply(cap), Rel::ge, demand(cap));
    if (supply(cap) == demand(cap))
        out.at_cap.check("equality pins every shared column exactly at the "
                         "floor and every other row at " + str(t - 1) +
                             " marks inside the shared set",
                         supply(cap), Rel::eq, demand(cap));
    return out;
}

auto intersection_sum_bounds(int b, int deg_x, int dmax, int dmin, int cap)
    -> SumBounds {
    if (deg_x < 1 || b < 2 || dmax < dmin || cap < 0 || cap > deg_x)
        throw std::invalid_argument("intersection sum bounds need deg_x >= 1, "
                                    "b >= 2, dmax >= dmin, 0 <= cap <= deg_x");
    SumBounds out;
    if (dmin <= 0) {
        out.lower = 0;
        out.upper = deg_x * b;
        return out;
    }
    out.lower = deg_x * dmin;
    out.upper = deg_x * dmax;   // column degrees never pass dmax
    out.below.check("a total of " + str(out.lower - 1) + " leaves some shared "
                        "column under the floor",
                    static_cast<long long>(out.lower - 1) / deg_x, Rel::lt,
                    dmin);
    if (cap < 1) return out;

    const long long one_full =
        dmax + static_cast<long long>(deg_x - 1) * (dmax - 1);
    const long long no_cap_row =
        deg_x + static_cast<long long>(b - 1) * (cap - 1);
    const long long target = std::max(one_full, no_cap_row) + 1;
    auto& ch = out.above;
    ch.check("suppose the total reaches " + str(target) + "; with at most one "
                 "full shared column it stays at " + str(one_full),
             one_full, Rel::lt, target);
    ch.check("with every other row under the shared-column cap it stays at " +
                 str(no_cap_row),
             no_cap_row, Rel::lt, target);
    ch.assume("so at least two shared columns are full and some other row x2 "
              "meets the shared set in cap columns; relabel those Y2");
    const long long supply = 2LL * cap + static_cast<long long>(b - 2) * 2;
    const long long dem = static_cast<long long>(cap) * dmin;
    ch.check("the anchor, x2, and two marks from each other row just cover "
             "the floor demand on Y2, pinning Y2 at the floor and every other "
             "row at exactly two marks there",
             supply, Rel::eq, dem);
    ch.check("one absent mark would starve a Y2 column", (supply - 1) / cap,
             Rel::lt, dmin);
    ch.check("a second cap row would pin " + str(2LL * cap - 2) + " columns "
                 "at the floor, capping the total below the supposition",
             (2LL * cap - 2) * dmin + dmax, Rel::lt, target);
    ch.check("one cap row and " + str(b - 2) + " rows of at most " +
                 str(cap - 1) + " marks top the total at the supposed " +
                 str(target) + " exactly, pinning every other row at " +
                 str(cap - 1),
             deg_x + cap + static_cast<long long>(b - 2) * (cap - 1), Rel::eq,
             target);
    ch.check("Y2 sits at the floor, so the full columns lie outside it", dmin,
             Rel::lt, dmax);
    ch.assume("pick a full shared column y outside Y2; x2 has no mark beyond "
              "Y2, so y meets " + str(dmax - 1) + " rows besides the anchor, "
              "each with exactly " + str(cap - 1) + " shared marks");
    ch.check("each such row keeps one mark among the remaining " +
                 str(deg_x - cap - 1) + " shared columns",
             static_cast<long long>(cap - 1) - 2 - 1, Rel::eq, 1);
    ch.check("those marks crowd three rows onto one column",
             (static_cast<long long>(dmax - 1) + (deg_x - cap - 1) - 1) /
                 (deg_x - cap - 1),
             Rel::ge, 3);
    ch.check("three rows with two exact Y2 marks each must share a Y2 column; "
             "the anchor and two sharing rows with the shared, full, and "
             "crowded columns form the forbidden grid",
             3LL * 2, Rel::gt, cap);
    if (out.below.valid() && ch.valid())
        out.upper = static_cast<int>(target - 1);
    return out;
}

auto refute_intersection_sum(int n_value, int b) -> CaseLedger {
    if (n_value == 72) return refute_sum_72(b);
    if (n_value == 73) return refute_sum_73(b);
    throw std::invalid_argument("no recorded case analysis for a shared-"
                                "neighbor total of " + str(n_value));
}

auto replay_b223(const ZTable& table, Convention convention) -> ReplayVerdict {
    constexpr int b = 17;
    ReplayVerdict v;
    const auto merge_missing = [&](const std::vector<std::string>& more) {
        for (const auto& key : more)
            if (std::find(v.missing_entries.begin(), v.missing_entries.end(),
                          key) == v.missing_entries.end())
                v.missing_entries.push_back(key);
    };
    const auto finish = [&](Conclusion c, std::string reason) {
        v.conclusion = c;
        v.stopped_at = std::move(reason);
        if (v.conclusion == Conclusion::infeasible && !v.missing_entries.empty()) {
            v.conclusion = Conclusion::feasible_not_refuted;
            v.stopped_at = "required z-table entries are not stored";
        }
        return v;
    };

    // color class totals
    const auto bal = fix_color_class_sizes(b, {2, 2, 3}, table);
    merge_missing(bal.missing);
    const long long zs = z_lookup(table, b, b, 2).ub;
    const long long zg = z_lookup(table, b, b, 3).ub;
    CaseLedger l0;
    l0.description = "edge totals of the three color classes on the 17 x 17 "
                     "board";
    if (!bal.feasible) {
        StepChain ch;
        ch.check("the two pair caps and the green cap cannot cover the " +
                     str(bal.total) + " edges",
                 2 * zs + zg, Rel::lt, bal.total);
        record_case(l0, "red, blue and green together cover the board",
                    std::move(ch));
        v.ledgers.push_back(std::move(l0));
        return finish(Conclusion::infeasible, "");
    }
    const int lo = bal.green_lower;
    const int hi = bal.green_upper;
    l0.preamble.check("the two pair caps and the green cap cover the board",
                      2 * zs + zg, Rel::ge, bal.total);
    if (lo > 0) {
        StepChain ch;
        const long long push = (bal.total - (lo - 1) + 1) / 2;
        ch.check("green at " + str(lo - 1) + " forces one pair class to " +
                     str(push) + ", past the pair cap",
                 push, Rel::gt, zs);
        record_case(l0, "green <= " + str(lo - 1), std::move(ch));
    }
    record_survivor(l0, bal.tight ? "green = " + str(lo)
                                  : "green in [" + str(lo) + ", " + str(hi) + "]");
    {
        StepChain ch;
        if (hi + 1 > zg)
            ch.check("green at " + str(hi + 1) + " crosses the green cap",
                     hi + 1, Rel::gt, zg);
        else
            ch.check("green at " + str(hi + 1) + " exceeds the board itself",
                     hi + 1, Rel::gt, bal.total);
        record_case(l0, "green >= " + str(hi + 1), std::move(ch));
    }
    if (bal.tight && bal.pair_tight) {
        const int side = bal.side_edges;
        for (const char* color : {"red", "blue"}) {
            StepChain chL;
            const long long other = bal.total - lo - (side - 1);
            chL.check("with green pinned, " + std::string(color) + " at " +
                          str(side - 1) + " pushes the other pair class to " +
                          str(other) + ", past the pair cap",
                      other, Rel::gt, zs);
            record_case(l0, std::string(color) + " <= " + str(side - 1),
                        std::move(chL));
            record_survivor(l0, std::string(color) + " = " + str(side));
            StepChain chH;
            chH.check(std::string(color) + " at " + str(side + 1) +
                          " crosses the pair cap",
                      side + 1, Rel::gt, zs);
            record_case(l0, std::string(color) + " >= " + str(side + 1),
                        std::move(chH));
        }
    }
    v.ledgers.push_back(std::move(l0));
    if (!bal.tight)
        return finish(Conclusion::feasible_not_refuted,
                      "green edge total is not pinned to a single value");
    const long long E = bal.green_upper;

    // largest green row degree; the recorded chain removes a degree-10 row
    const auto db = delta_bound_step(b, {2, 2, 3}, table, convention);
    merge_missing(db.missing);
    if (db.strictness_flag)
        v.flags.push_back(
            "the degree-" + str(db.least_refuted_nonstrict) + " removal "
            "closes only under the nonstrict reading; strict refutation " +
            (db.least_refuted_strict == 0
                 ? std::string("never fires")
                 : "first fires at degree " + str(db.least_refuted_strict)));
    const long long zpair = z_lookup(table, b - 1, b, 2).ub;
    const long long board2 = static_cast<long long>(b - 1) * b;
    CaseLedger l1;
    l1.description = "largest green row degree";
    if (db.least_refuted_strict != 0 &&
        db.least_refuted_strict != db.least_refuted_nonstrict)
        l1.preamble.check("read strictly, the removal argument first fires at "
                          "degree " + str(db.least_refuted_strict),
                          (board2 - (E - db.least_refuted_strict) + 1) / 2,
                          Rel::gt, zpair);
    {
        StepChain ch;
        const long long left = E - 10;
        ch.check("a green row of degree 10 leaves at most 131 green edges on "
                 "the other sixteen rows",
                 left, Rel::eq, 131);
        const long long comp = board2 - left;
        ch.check("their complements inside the 16 x 17 board then hold 141 "
                 "pair edges",
                 comp, Rel::eq, 141);
        const long long load = (comp + 1) / 2;
        const bool flagged = load >= zpair && !(load > zpair);
        ch.check("one pair class carries at least 71 of them, against the "
                 "16 x 17 pair cap",
                 load,
                 convention == Convention::strict ? Rel::gt : Rel::ge,
                 zpair, flagged);
        record_case(l1, "some green row of degree >= 10", std::move(ch));
    }
    record_survivor(l1, "every green row degree <= 9");
    const bool degree_closed = l1.refuted("some green row of degree >= 10");
    v.ledgers.push_back(std::move(l1));
    if (!degree_closed)
        return finish(Conclusion::feasible_not_refuted,
                      "the bound on the largest green row degree does not "
                      "close");

    // degree multisets at the established ceiling
    CaseLedger l2;
    l2.description =
        "green row degree multisets: seventeen values in [0, 9] summing to " +
        str(E) + ", the column side following by transposition; the opening "
        "entry shows the best multiset with only four full rows falling short";
    {
        std::vector<int> boundary(b, kDMin);
        for (int i = 0; i < 4; ++i) boundary[i] = kDMax;
        auto verdict = refute_degree_multiset(boundary, b, 3, table, E);
        record_case(l2, multiset_label(boundary), std::move(verdict.chain));
    }
    for (const auto& degrees : enumerate_degree_multisets(b, static_cast<int>(E), 9)) {
        auto verdict = refute_degree_multiset(degrees, b, 3, table, E);
        record_case(l2, multiset_label(degrees), std::move(verdict.chain));
    }
    for (int k = 1; k <= b; ++k) note_missing(v.missing_entries, table, k, b, 3);
    const auto survivors = l2.survivors;
    v.ledgers.push_back(std::move(l2));
    if (survivors.empty()) return finish(Conclusion::infeasible, "");
    if (survivors != std::vector<std::string>{"9^5 8^12"})
        return finish(Conclusion::feasible_not_refuted,
                      "the degree multisets do not reduce to the single "
                      "recorded survivor");

    // shared columns between two full rows
    const auto ic = intersection_cap(kDegX, b, 3, kDMin);
    CaseLedger l3;
    l3.description = "columns shared by two full green rows (degree 9 against "
                     "floor 8)";
    l3.preamble = ic.at_cap;
    record_case(l3, "two full rows share >= 6 columns", ic.refutation);
    record_survivor(l3, "two full rows share <= 5 columns");
    v.ledgers.push_back(std::move(l3));
    if (ic.cap != kCap)
        return finish(Conclusion::feasible_not_refuted,
                      "the shared-column cap does not match the recorded "
                      "value");

    // shared-neighbor totals of a full row
    const auto sb = intersection_sum_bounds(b, kDegX, kDMax, kDMin, ic.cap);
    CaseLedger l4;
    l4.description = "the shared-neighbor total n of a full green row: the "
                     "sum of its nine columns' green degrees; the surviving "
                     "values are taken up case by case below";
    record_case(l4, "n <= " + str(sb.lower - 1), sb.below);
    record_case(l4, "n >= " + str(sb.upper + 1), sb.above);
    const bool interval_matches = sb.lower == 72 && sb.upper == 73;
    if (interval_matches) {
        record_survivor(l4, "n = 72");
        record_survivor(l4, "n = 73");
    } else {
        record_survivor(l4, "n in [" + str(sb.lower) + ", " + str(sb.upper) + "]");
    }
    v.ledgers.push_back(std::move(l4));
    if (!interval_matches)
        return finish(Conclusion::feasible_not_refuted,
                      "the shared-neighbor interval does not match the "
                      "recorded one");

    for (int n_value : {72, 73}) {
        auto led = refute_intersection_sum(n_value, b);
        const bool closed = led.complete();
        v.ledgers.push_back(std::move(led));
        if (!closed)
            return finish(Conclusion::feasible_not_refuted,
                          "the case analysis for a shared-neighbor total of " +
                              str(n_value) + " does not close");
    }
    return finish(Conclusion::infeasible, "");
}

auto replay_coarse_upper(int b, const std::vector<int>& sizes,
                         const ZTable& table) -> CoarseUpper {
    if (b < 1) throw std::invalid_argument("board side must be positive");
    if (sizes.size() != 3 || sizes[0] != sizes[1] || sizes[0] < 1 || sizes[2] < 1)
        throw std::invalid_argument("expected biclique sizes {s, s, g}");
    CoarseUpper out;
    out.b = b;
    const long long zs = z_lookup(table, b, b, sizes[0]).ub;
    const long long zg = z_lookup(table, b, b, sizes[2]).ub;
    note_missing(out.missing, table, b, b, sizes[0]);
    note_missing(out.missing, table, b, b, sizes[2]);
    out.steps.check("the two pair caps and the green cap fall short of the " +
                        str(b) + " x " + str(b) + " board",
                    2 * zs + zg, Rel::lt, static_cast<long long>(b) * b);
    out.holds = out.steps.valid();
    return out;
}

auto replay_upper18(const ZTable& table) -> CoarseUpper {
    return replay_coarse_upper(18, {2, 2, 3}, table);
}

} // namespace bramsey
