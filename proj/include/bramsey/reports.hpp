#pragma once

#include <string>

#include <json.hpp>

#include "bramsey/replay.hpp"

// Renderers for replay output.  The text form is what the command line
// prints; the JSON form is written next to it for tooling.  Both are plain
// functions of the verdict structures, so a report can be regenerated from
// a stored verdict byte for byte.

namespace bramsey {

auto render_text(const ArithStep& step) -> std::string;
auto render_text(const StepChain& chain, int indent = 0) -> std::string;
auto render_text(const CaseLedger& ledger) -> std::string;
auto render_text(const ReplayVerdict& verdict) -> std::string;
auto render_text(const CoarseUpper& upper) -> std::string;

auto to_json(const ArithStep& step) -> nlohmann::json;
auto to_json(const StepChain& chain) -> nlohmann::json;
auto to_json(const CaseLedger& ledger) -> nlohmann::json;
auto to_json(const ReplayVerdict& verdict) -> nlohmann::json;
auto to_json(const CoarseUpper& upper) -> nlohmann::json;

} // namespace bramsey
