// Golden-file tests for the command-line tool.  The binary path and fixture
// directory come from the environment (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string binary() {
    const char* env = std::getenv("SKEWCELL_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SKEWCELL_BIN must point at the CLI binary");
    return env;
}

std::string fixtures() {
    const char* env = std::getenv("SKEWCELL_FIXTURES");
    REQUIRE_MESSAGE(env != nullptr, "SKEWCELL_FIXTURES must point at the fixtures directory");
    return env;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& name) {
    std::ifstream in(fixtures() + "/" + name);
    REQUIRE_MESSAGE(in.good(), ("missing fixture " + name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("graph output matches the frozen figure data") {
    auto young = run("graph --family symmetric --levels 3 --format json");
    CHECK(young.exit_code == 0);
    CHECK(json::parse(young.out) == json::parse(slurp("graph_symmetric_l3.json")));

    auto brauer = run("graph --family brauer --levels 2 --format json");
    CHECK(brauer.exit_code == 0);
    CHECK(json::parse(brauer.out) == json::parse(slurp("graph_brauer_l2.json")));

    auto part = run("graph --family partition --levels 1 --format json");
    CHECK(part.exit_code == 0);
    CHECK(json::parse(part.out) == json::parse(slurp("graph_partition_l1.json")));
}

TEST_CASE("dims table golden") {
    auto res = run("dims --family partition --level 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out == slurp("dims_partition_l2.txt"));
}

TEST_CASE("kron both methods golden") {
    auto res = run("kron --l 1 --m 1 --v 2 --method both");
    CHECK(res.exit_code == 0);
    CHECK(res.out == slurp("kron_l1_m1_v2_both.txt"));
}

TEST_CASE("skewdim golden") {
    auto res = run("skewdim --l 1 --v 1 --s 1 --family partition");
    CHECK(res.exit_code == 0);
    CHECK(res.out == slurp("skewdim_l1_v1_s1.txt"));
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string cmd = "paths --family partition --to 1 --to-level 2 --format json";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto k1 = run("kron --l 1 --m 1 --v 1,1 --method both --format json --seed 5");
    auto k2 = run("kron --l 1 --m 1 --v 1,1 --method both --format json --seed 5");
    CHECK(k1.out == k2.out);
}

TEST_CASE("csv format") {
    auto res = run("dims --family partition --level 2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "shape,dim\n[],2\n1,3\n2,1\n\"1,1\",1\n");
    auto g = run("graph --family symmetric --levels 1 --format csv");
    CHECK(g.exit_code == 0);
    CHECK(g.out == "level,from,to\n1,[],1\n");
}

TEST_CASE("half levels parse on the command line") {
    auto res = run("dims --family partition --level 1.5 --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.out);
    CHECK(j["twice_level"] == 3);
    CHECK(j["dims"].size() == 2);
}

TEST_CASE("errors are machine-parsable json and exit nonzero") {
    auto res = run("dims --family nosuch --level 2");
    CHECK(res.exit_code == 1);
    json j = json::parse(res.out);
    CHECK(j.contains("error"));

    auto bad = run("paths --family brauer --to 1 --to-level 1.5");
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.out).contains("error"));

    auto flag = run("dims --format bogus --level 2");
    CHECK(flag.exit_code == 1);
    CHECK(json::parse(flag.out).contains("error"));
}

TEST_CASE("the worker cap does not change verify output") {
    std::string plain = run("verify --suite branching --max-level 2").out;
    std::string cmd = "SKEWCELL_THREADS=3 " + binary() + " verify --suite all --max-level 2 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string fanned;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) fanned.append(buf.data(), got);
    int status = pclose(pipe);
    CHECK(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fanned.find(plain) != std::string::npos);  // suite output embedded unchanged, in order
}

TEST_CASE("verify subcommand reports and exits zero") {
    auto res = run("verify --suite diagrams --max-level 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("PASS diagrams.basis-counts") != std::string::npos);
    CHECK(res.out.find("FAIL") == std::string::npos);
}
