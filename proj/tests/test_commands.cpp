#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "eigenposet/errors.hpp"
#include "eigenposet/commands.hpp"

using namespace eigenposet;

namespace {

CommandRequest request(std::string command, int m, int p, int n, int d)
{
    CommandRequest r;
    r.command = std::move(command);
    r.m = m;
    r.p = p;
    r.n = n;
    r.d = d;
    return r;
}

std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("table3 output matches the fixture")
{
    CHECK(table3_text(9) == read_fixture("table3.txt"));
    CommandRequest r;
    r.command = "table3";
    CHECK(run_command(r).output == read_fixture("table3.txt"));
}

TEST_CASE("classify")
{
    const CommandResult result = run_command(request("classify", 2, 2, 3, 2));
    CHECK(result.verified);
    CHECK(result.output == "FREE_KPI1_HYPERPLANE z1z2z3\n");
}

TEST_CASE("build formats")
{
    CommandRequest r = request("build", 1, 1, 4, 2);
    r.format = "dot";
    const std::string dot = run_command(r).output;
    CHECK(dot.rfind("digraph", 0) == 0);
    std::size_t nodes = 0, edges = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
        if (line.find("[label=") != std::string::npos) ++nodes;
        if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 13);
    CHECK(edges > 0);
    r.format = "json";
    const auto j = nlohmann::json::parse(run_command(r).output);
    CHECK(j["schema"] == 1);
    CHECK(j["params"]["n"] == 4);
    CHECK(j["poset"]["elements"].size() == 13);
    CHECK(j["atoms"].size() == 3);
    r.command = "dot";
    r.format = "text";
    CHECK(run_command(r).output == dot);
}

TEST_CASE("deterministic output")
{
    CommandRequest r = request("build", 4, 2, 3, 3);
    r.format = "json";
    CHECK(run_command(r).output == run_command(r).output);
}

TEST_CASE("homology commands")
{
    CommandRequest r = request("betti", 1, 1, 1, 1);
    r.poset = "balanced";
    r.n = 5;
    r.d = 2;
    CHECK(run_command(r).output.find("H1=21") != std::string::npos);
    r.command = "moebius";
    r.poset = "dowling";
    r.n = 3;
    r.d = 2;
    CHECK(run_command(r).output == "mu(bottom, top) = -15\n");
    r = request("specht", 1, 1, 4, 3);
    const std::string specht = run_command(r).output;
    CHECK(specht.find("dimension 7") != std::string::npos);
}

TEST_CASE("theorem checks report success")
{
    CHECK(run_command(request("rao-check", 1, 1, 4, 2)).verified);
    CHECK(run_command(request("witness-check", 4, 4, 2, 4)).verified);
    CHECK(run_command(request("geometric-check", 2, 2, 4, 2)).verified);
    CommandRequest ind = request("independence", 4, 4, 2, 1);
    ind.d2 = 2;
    CHECK(run_command(ind).output.find("posets equal: yes") != std::string::npos);
    CHECK(run_command(request("ribbon-check", 1, 1, 5, 2)).verified);
    CHECK(run_command(request("zeroing-conjecture", 1, 1, 3, 2)).output.find("source dim 2") != std::string::npos);
    CHECK(run_command(request("complement", 1, 1, 3, 1)).output == "H~^1 = 3\nH~^2 = 2\n");
}

TEST_CASE("usage errors")
{
    CHECK_THROWS_AS(run_command(request("build", 3, 2, 2, 2)), InvalidArgument);
    CHECK_THROWS_AS(run_command(request("nonsense", 1, 1, 2, 2)), InvalidArgument);
    CHECK_THROWS_AS(run_command(request("independence", 1, 1, 3, 2)), InvalidArgument);
    CommandRequest r = request("betti", 1, 1, 2, 2);
    r.poset = "mystery";
    CHECK_THROWS_AS(run_command(r), InvalidArgument);
    r = request("build", 1, 1, 7, 2);
    r.budget = 10;
    CHECK_THROWS_AS(run_command(r), BudgetExceeded);
}
