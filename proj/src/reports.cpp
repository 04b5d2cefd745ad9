#include "bramsey/reports.hpp"

#include <sstream>

namespace bramsey {

namespace {

auto pad(int indent) -> std::string { return std::string(indent, ' '); }

} // namespace

auto render_text(const ArithStep& step) -> std::string {
    if (step.assumed) return step.label + "  ASSUMED";
    std::string out = step.label + ": " + std::to_string(step.lhs) + " " +
                      to_string(step.rel) + " " + std::to_string(step.rhs);
    out += step.holds ? "  HOLDS" : "  FAILS";
    if (step.strictness_flag) out += "  FLAGGED";
    return out;
}

auto render_text(const StepChain& chain, int indent) -> std::string {
    std::ostringstream out;
    for (const auto& step : chain.steps)
        out << pad(indent) << render_text(step) << '\n';
    return out.str();
}

auto render_text(const CaseLedger& ledger) -> std::string {
    std::ostringstream out;
    out << "== " << ledger.description << '\n';
    out << render_text(ledger.preamble, 2);
    for (const auto& id : ledger.cases) {
        const bool gone = ledger.refuted(id);
        out << "  case " << id << ": " << (gone ? "refuted" : "SURVIVES")
            << '\n';
        auto it = ledger.refutations.find(id);
        if (it != ledger.refutations.end())
            out << render_text(it->second, 4);
    }
    return out.str();
}

auto render_text(const ReplayVerdict& verdict) -> std::string {
    std::ostringstream out;
    out << "conclusion: " << to_string(verdict.conclusion) << '\n';
    for (const auto& flag : verdict.flags) out << "flag: " << flag << '\n';
    if (!verdict.stopped_at.empty())
        out << "stopped at: " << verdict.stopped_at << '\n';
    for (const auto& key : verdict.missing_entries)
        out << "missing: " << key << '\n';
    for (const auto& ledger : verdict.ledgers) out << render_text(ledger);
    return out.str();
}

auto render_text(const CoarseUpper& upper) -> std::string {
    std::ostringstream out;
    out << "coarse upper bound at b = " << upper.b << ": "
        << (upper.holds ? "holds" : "fails") << '\n';
    out << render_text(upper.steps, 2);
    for (const auto& key : upper.missing) out << "missing: " << key << '\n';
    return out.str();
}

auto to_json(const ArithStep& step) -> nlohmann::json {
    return nlohmann::json{{"label", step.label},
                          {"assumed", step.assumed},
                          {"lhs", step.lhs},
                          {"relation", to_string(step.rel)},
                          {"rhs", step.rhs},
                          {"holds", step.holds},
                          {"strictness_flag", step.strictness_flag}};
}

auto to_json(const StepChain& chain) -> nlohmann::json {
    auto steps = nlohmann::json::array();
    for (const auto& step : chain.steps) steps.push_back(to_json(step));
    return steps;
}

auto to_json(const CaseLedger& ledger) -> nlohmann::json {
    auto refutations = nlohmann::json::object();
    for (const auto& [id, chain] : ledger.refutations)
        refutations[id] = to_json(chain);
    return nlohmann::json{{"description", ledger.description},
                          {"preamble", to_json(ledger.preamble)},
                          {"cases", ledger.cases},
                          {"refutations", refutations},
                          {"survivors", ledger.survivors}};
}

auto to_json(const ReplayVerdict& verdict) -> nlohmann::json {
    auto ledgers = nlohmann::json::array();
    for (const auto& ledger : verdict.ledgers)
        ledgers.push_back(to_json(ledger));
    return nlohmann::json{{"conclusion", to_string(verdict.conclusion)},
                          {"flags", verdict.flags},
                          {"stopped_at", verdict.stopped_at},
                          {"missing_entries", verdict.missing_entries},
                          {"ledgers", ledgers}};
}

auto to_json(const CoarseUpper& upper) -> nlohmann::json {
    return nlohmann::json{{"b", upper.b},
                          {"holds", upper.holds},
                          {"steps", to_json(upper.steps)},
                          {"missing_entries", upper.missing}};
}

} // namespace bramsey
