#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bramsey/ramsey.hpp"
#include "bramsey/replay.hpp"
#include "bramsey/reports.hpp"
#include "bramsey/zarankiewicz.hpp"

// Exit codes: 0 success (including a completed search that found nothing),
// 1 failed verification or refutation, 2 usage, 3 budget exhausted.

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

auto load_table(const std::string& spec) -> bramsey::ZTable {
    if (spec.empty() || spec == "shipped") return bramsey::ZTable::builtin();
    return bramsey::load_ztable_file(spec);
}

auto key(int m, int n, int t) -> std::string {
    return "z(" + std::to_string(m) + "," + std::to_string(n) + "," +
           std::to_string(t) + ")";
}

auto joined_sizes(const std::vector<int>& sizes) -> std::string {
    std::string out = "B(";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(sizes[i]);
    }
    return out + ")";
}

auto write_file(const std::string& path, const std::string& bytes) -> void {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << bytes;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

auto run_z_compute(int m, int n, int t, long long budget,
                   const std::string& table_spec) -> int {
    const auto table = load_table(table_spec);
    const auto rec = bramsey::z_exact(m, n, t, budget, &table);
    if (rec.lb == rec.ub) {
        std::cout << key(m, n, t) << " = " << rec.lb << " ("
                  << bramsey::to_string(rec.provenance) << ")\n";
        return kOk;
    }
    std::cout << rec.lb << " <= " << key(m, n, t) << " <= " << rec.ub
              << " (budget exhausted)\n";
    return kBudget;
}

auto run_z_bound(int m, int n, int t, const std::string& table_spec) -> int {
    const auto table = load_table(table_spec);
    const auto rec = bramsey::z_lookup(table, m, n, t);
    std::cout << rec.lb << " <= " << key(m, n, t) << " <= "
              << bramsey::kst_upper_bound(m, n, t) << "\n";
    return kOk;
}

auto run_z_verify(const std::string& table_spec) -> int {
    const auto table = load_table(table_spec);
    const auto report = bramsey::verify_table(table);
    for (const auto& v : report.violations) std::cout << v << "\n";
    if (report.ok()) {
        std::cout << "table ok: " << table.size() << " records\n";
        return kOk;
    }
    std::cout << report.violations.size() << " violations\n";
    return kFailed;
}

auto run_search(int b, const std::vector<int>& sizes,
                const bramsey::SearchConfig& config, const std::string& out)
    -> int {
    bramsey::RamseyInstance inst;
    inst.b = b;
    inst.sizes = sizes;
    const auto outcome = bramsey::search_witness(inst, config);
    switch (outcome.kind) {
        case bramsey::SearchOutcome::Kind::witness: {
            const auto text = bramsey::format_witness(*outcome.witness);
            if (out.empty()) {
                std::cout << text;
            } else {
                write_file(out, text);
                std::cout << "witness written to " << out << "\n";
            }
            return kOk;
        }
        case bramsey::SearchOutcome::Kind::exhausted:
            std::cout << "Exhausted; no witness\n";
            return kOk;
        case bramsey::SearchOutcome::Kind::budget_exceeded:
            std::cout << "Budget exhausted; no certificate\n";
            return kBudget;
    }
    return kUsage;
}

auto run_verify(const std::string& path, const std::vector<int>& sizes) -> int {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    const auto coloring = bramsey::parse_witness(in);
    const auto report = bramsey::verify_witness(coloring, sizes);
    for (const auto& c : report.colors)
        std::cout << "color " << c.color << " must avoid K_{" << c.order << ","
                  << c.order << "}: "
                  << (c.monochromatic ? "contains one" : "clean") << "\n";
    std::cout << (report.valid ? "valid witness\n" : "invalid witness\n");
    return report.valid ? kOk : kFailed;
}

auto run_number(const std::vector<int>& sizes, int b_max,
                const bramsey::SearchConfig& config) -> int {
    const auto result = bramsey::bipartite_ramsey(sizes, b_max, config);
    bool budget_hit = false;
    for (const auto& [b, kind] : result.outcomes) {
        const char* what = "witness";
        if (kind == bramsey::SearchOutcome::Kind::exhausted) what = "exhausted";
        if (kind == bramsey::SearchOutcome::Kind::budget_exceeded) {
            what = "budget exceeded";
            budget_hit = true;
        }
        std::cout << "b = " << b << ": " << what << "\n";
    }
    if (result.exact) {
        std::cout << joined_sizes(sizes) << " = " << *result.exact << "\n";
        return kOk;
    }
    if (budget_hit) {
        std::cout << joined_sizes(sizes) << " >= " << result.lower
                  << "; budget exhausted at b = " << result.searched_to << "\n";
        return kBudget;
    }
    std::cout << joined_sizes(sizes) << " > " << result.searched_to << "\n";
    return kOk;
}

auto run_replay_b223(const std::string& table_spec,
                     const std::string& convention, const std::string& out)
    -> int {
    const auto table = load_table(table_spec);
    const auto conv = convention == "strict" ? bramsey::Convention::strict
                                             : bramsey::Convention::nonstrict;
    const auto verdict = bramsey::replay_b223(table, conv);
    std::cout << bramsey::render_text(verdict);
    if (!out.empty()) write_file(out, bramsey::to_json(verdict).dump(2) + "\n");
    return verdict.conclusion == bramsey::Conclusion::infeasible ? kOk
                                                                 : kFailed;
}

auto run_replay_upper18(const std::string& table_spec, const std::string& out)
    -> int {
    const auto table = load_table(table_spec);
    const auto upper = bramsey::replay_upper18(table);
    std::cout << bramsey::render_text(upper);
    if (!out.empty()) write_file(out, bramsey::to_json(upper).dump(2) + "\n");
    return upper.holds ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver and verifier workbench for bipartite Ramsey and "
                 "Zarankiewicz numbers"};
    app.require_subcommand(1);
    int rc = kOk;

    // z ------------------------------------------------------------------
    auto* z = app.add_subcommand("z", "Zarankiewicz numbers");
    z->require_subcommand(1);

    int zm = 1, zn = 1, zt = 1;
    long long z_budget = 100'000'000;
    std::string z_table = "shipped";
    auto* compute = z->add_subcommand("compute", "exact value by branch and "
                                                 "bound");
    compute->add_option("m", zm, "rows")->required();
    compute->add_option("n", zn, "columns")->required();
    compute->add_option("t", zt, "forbidden biclique order")->required();
    compute->add_option("--budget", z_budget, "row placements to attempt");
    compute->add_option("--ztable", z_table, "z-table file, or `shipped`");
    compute->callback(
        [&] { rc = run_z_compute(zm, zn, zt, z_budget, z_table); });

    auto* bound = z->add_subcommand("bound", "table lower bound against the "
                                             "counting upper bound");
    bound->add_option("m", zm, "rows")->required();
    bound->add_option("n", zn, "columns")->required();
    bound->add_option("t", zt, "forbidden biclique order")->required();
    bound->add_option("--ztable", z_table, "z-table file, or `shipped`");
    bound->callback([&] { rc = run_z_bound(zm, zn, zt, z_table); });

    std::string verify_spec = "shipped";
    auto* vt = z->add_subcommand("verify-table", "internal consistency sweep");
    vt->add_option("table", verify_spec, "z-table file, or `shipped`")
        ->required();
    vt->callback([&] { rc = run_z_verify(verify_spec); });

    // ramsey ---------------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "bipartite Ramsey search");
    ramsey->require_subcommand(1);

    int board = 1;
    std::vector<int> sizes;
    bramsey::SearchConfig config;
    bool no_symmetry = false;
    std::string out_path;

    auto* search = ramsey->add_subcommand("search", "look for a good coloring "
                                                    "of one board");
    search->add_option("b", board, "board side")->required();
    search->add_option("sizes", sizes, "forbidden order per color")
        ->required()
        ->expected(1, 4);
    search->add_option("--budget", config.budget, "cell assignments to "
                                                  "attempt");
    search->add_option("--workers", config.workers, "parallel branches");
    search->add_flag("--no-symmetry", no_symmetry, "disable symmetry pruning");
    search->add_option("--out", out_path, "write the witness to a file");
    search->callback([&] {
        config.symmetry = !no_symmetry;
        rc = run_search(board, sizes, config, out_path);
    });

    std::string witness_path;
    auto* verify = ramsey->add_subcommand("verify", "check a witness file");
    verify->add_option("file", witness_path, "witness file")->required();
    verify->add_option("sizes", sizes, "forbidden order per color")
        ->required()
        ->expected(1, 4);
    verify->callback([&] { rc = run_verify(witness_path, sizes); });

    int b_max = 18;
    auto* number = ramsey->add_subcommand("number", "least board with no good "
                                                    "coloring");
    number->add_option("sizes", sizes, "forbidden order per color")
        ->required()
        ->expected(1, 4);
    number->add_option("--bmax", b_max, "largest board to try");
    number->add_option("--budget", config.budget, "cell assignments per "
                                                  "board");
    number->add_option("--workers", config.workers, "parallel branches");
    number->add_flag("--no-symmetry", no_symmetry, "disable symmetry pruning");
    number->callback([&] {
        config.symmetry = !no_symmetry;
        rc = run_number(sizes, b_max, config);
    });

    // replay ---------------------------------------------------------------
    auto* replay = app.add_subcommand("replay", "machine-checked counting "
                                                "arguments");
    replay->require_subcommand(1);

    std::string r_table = "shipped";
    std::string convention = "nonstrict";
    std::string r_out;
    auto* b223 = replay->add_subcommand("b223", "the 17 x 17 three-color "
                                                "infeasibility argument");
    b223->add_option("--ztable", r_table, "z-table file, or `shipped`");
    b223->add_option("--convention", convention, "z-cap reading")
        ->check(CLI::IsMember({"strict", "nonstrict"}));
    b223->add_option("--out", r_out, "write the verdict as JSON");
    b223->callback([&] { rc = run_replay_b223(r_table, convention, r_out); });

    auto* u18 = replay->add_subcommand("upper18", "the 18 x 18 coarse cover "
                                                  "bound");
    u18->add_option("--ztable", r_table, "z-table file, or `shipped`");
    u18->add_option("--out", r_out, "write the verdict as JSON");
    u18->callback([&] { rc = run_replay_upper18(r_table, r_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return rc;
}
