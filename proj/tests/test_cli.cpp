#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

// Drives the installed binary end to end through a shell, checking printed
// lines and exit codes: 0 success, 1 failed check, 2 usage, 3 budget.

namespace {

struct RunResult {
    int rc = -1;
    std::string out;
};

auto run(const std::string& args) -> RunResult
{
    const std::string cmd = std::string(BRAMSEY_CLI) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (pipe == nullptr)
        return res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        res.rc = WEXITSTATUS(status);
    return res;
}

auto contains(const std::string& hay, const std::string& needle) -> bool
{
    return hay.find(needle) != std::string::npos;
}

auto slurp(const std::string& path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    std::string all((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    return all;
}

} // namespace

TEST_CASE("z compute prints the exact value with its provenance")
{
    auto r = run("z compute 3 3 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "z(3,3,2) = 6 (computed-exact)\n");
}

TEST_CASE("z compute reports an interval and exit 3 when the budget dies")
{
    auto r = run("z compute 5 5 2 --budget 1");
    CHECK(r.rc == 3);
    CHECK(contains(r.out, "<= z(5,5,2) <="));
    CHECK(contains(r.out, "budget exhausted"));
}

TEST_CASE("z bound pairs the table floor with the counting ceiling")
{
    auto r = run("z bound 17 17 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "74 <= z(17,17,2) <= 76\n");
}

TEST_CASE("z verify-table accepts the shipped table")
{
    auto r = run("z verify-table shipped");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "table ok: 9 records"));
}

TEST_CASE("z verify-table flags a broken file and exits 1")
{
    // loads fine, but the upper bound sits above the counting ceiling
    {
        std::ofstream out("cli_bad_table.txt");
        out << "3 3 2 6 7 paper\n";
    }
    auto r = run("z verify-table cli_bad_table.txt");
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "violation"));
    std::remove("cli_bad_table.txt");

    // records the loader itself rejects also exit 1
    {
        std::ofstream out("cli_unloadable.txt");
        out << "3 3 2 7 6 paper\n";
    }
    CHECK(run("z verify-table cli_unloadable.txt").rc == 1);
    std::remove("cli_unloadable.txt");
}

TEST_CASE("z commands read bounds from a caller supplied table")
{
    {
        std::ofstream out("cli_tiny_table.txt");
        out << "3 3 2 6 6 computed-exact\n";
    }
    auto r = run("z bound 3 3 2 --ztable cli_tiny_table.txt");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "6 <= z(3,3,2) <="));
    std::remove("cli_tiny_table.txt");
}

TEST_CASE("ramsey number settles the 2,2 instance at 5")
{
    auto r = run("ramsey number 2 2");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "b = 4: witness"));
    CHECK(contains(r.out, "b = 5: exhausted"));
    CHECK(contains(r.out, "B(2,2) = 5"));
}

TEST_CASE("ramsey search emits a witness below threshold, exhaustion at it")
{
    auto found = run("ramsey search 4 2 2");
    CHECK(found.rc == 0);
    CHECK(contains(found.out, "4 4 2"));

    auto gone = run("ramsey search 5 2 2");
    CHECK(gone.rc == 0);
    CHECK(gone.out == "Exhausted; no witness\n");
}

TEST_CASE("a written witness verifies through the file round trip")
{
    auto w = run("ramsey search 4 2 2 --out cli_witness.txt");
    CHECK(w.rc == 0);
    CHECK(contains(w.out, "witness written to cli_witness.txt"));

    auto v = run("ramsey verify cli_witness.txt 2 2");
    CHECK(v.rc == 0);
    CHECK(contains(v.out, "color 0 must avoid K_{2,2}: clean"));
    CHECK(contains(v.out, "valid witness"));

    // the file bytes equal the no-out stdout bytes
    auto direct = run("ramsey search 4 2 2");
    CHECK(slurp("cli_witness.txt") == direct.out);

    auto wrong = run("ramsey verify cli_witness.txt 2 2 3");
    CHECK(wrong.rc == 2);
    std::remove("cli_witness.txt");
}

TEST_CASE("a corrupted witness file fails verification with exit 1")
{
    {
        std::ofstream out("cli_corrupt.txt");
        out << "2 2 2\n01\n0\n";
    }
    auto r = run("ramsey verify cli_corrupt.txt 2 2");
    CHECK(r.rc == 1);
    std::remove("cli_corrupt.txt");
}

TEST_CASE("ramsey search signals a dead budget with exit 3")
{
    auto r = run("ramsey search 5 2 2 --budget 1");
    CHECK(r.rc == 3);
    CHECK(contains(r.out, "Budget exhausted"));
}

TEST_CASE("replay b223 closes on the shipped table and writes JSON")
{
    auto r = run("replay b223 --out cli_verdict.json");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "conclusion: infeasible"));
    CHECK(contains(r.out, "flag: the degree-10 removal"));
    CHECK(contains(r.out, "FLAGGED"));
    CHECK(contains(r.out, "case 9^5 8^12: SURVIVES"));

    auto j = nlohmann::json::parse(slurp("cli_verdict.json"));
    CHECK(j["conclusion"] == "infeasible");
    CHECK(j["ledgers"].size() == 7);
    std::remove("cli_verdict.json");

    // byte-identical on a second run
    auto again = run("replay b223");
    auto first = run("replay b223");
    CHECK(again.out == first.out);
}

TEST_CASE("replay b223 under the strict convention exits 1")
{
    auto r = run("replay b223 --convention strict");
    CHECK(r.rc == 1);
    CHECK(contains(r.out, "conclusion: feasible-not-refuted"));
    CHECK(contains(r.out, "stopped at: the bound on the largest green row "
                          "degree does not close"));
}

TEST_CASE("replay upper18 holds on the shipped table")
{
    auto r = run("replay upper18");
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "coarse upper bound at b = 18: holds"));
    CHECK(contains(r.out, "318 < 324"));
}

TEST_CASE("usage mistakes exit 2")
{
    CHECK(run("nope").rc == 2);
    CHECK(run("z compute 3 3").rc == 2);
    CHECK(run("replay b223 --convention sloppy").rc == 2);
    CHECK(run("ramsey search 4").rc == 2);
}
