#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

// CLI_BINARY and DATA_DIR are injected by the build.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) {
    auto nl = s.find('\n');
    return nl == std::string::npos ? s : s.substr(0, nl);
}

}  // namespace

TEST_CASE("chromatic subcommand prints the closed forms") {
    RunResult r = run("chromatic --variant subset " + data("t4.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "X^4 - X");

    r = run("chromatic --variant mixed --basis hilbert " + data("t5.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "5 H2 + 70 H3 + 180 H4 + 120 H5");

    r = run("chromatic --variant mixed " + data("t3.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "X^3 - 3/2*X^2 + 1/2*X");

    r = run("chromatic --variant cap --at-minus-one " + data("t3.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("value at -1: -6") != std::string::npos);
}

TEST_CASE("chromatic json output") {
    RunResult r = run("chromatic --variant subset --json " + data("t3.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["text"] == "X^3 - X");
    CHECK(j["coefficients"].size() == 4);
    CHECK(j["coefficients"][1] == "-1");
    CHECK(j["coefficients"][3] == "1");
}

TEST_CASE("coproduct and antipode subcommands emit sums") {
    RunResult r = run("coproduct --left subset --right subset " + data("t2.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 3);  // T_2(x)1, 1(x)T_2, 2 T_1(x)T_1

    r = run("coproduct --contract cap " + data("t3.json"));
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 3);

    r = run("antipode --method mixed " + data("t3.json"));
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 3);

    RunResult t = run("antipode --method takeuchi --left subset --right cap " + data("t3.json"));
    REQUIRE(t.code == 0);
    CHECK(nlohmann::json::parse(t.out) == nlohmann::json::parse(r.out));
}

TEST_CASE("orientations subcommand") {
    RunResult r = run("orientations --op sums " + data("t3.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 12);
    CHECK(j["signed_all"] == 0);
    CHECK(j["total_count"] == 6);
    CHECK(j["signed_one_max"] == -3);

    r = run("orientations --op classify --classes \"a,b|c\" --below \"0<1\" " + data("t3.json"));
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["acyclic"] == true);
    CHECK(j["total"] == false);
    CHECK(j["one_max"] == true);
}

TEST_CASE("character and eulerian subcommands") {
    RunResult r = run("character --mode cap " + data("t3.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "2");
    r = run("character --mode subset " + data("t5.json"));
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "-1");
    r = run("eulerian " + data("t3.json"));
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).size() == 2);
}

TEST_CASE("mc subcommands") {
    RunResult r = run("mc --op kappa " + data("mc_example.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["edges"].size() == 5);

    r = run("mc --op chromatic " + data("mc_example.json"));
    CHECK(r.code == 0);

    r = run("mc --op quotient --blocks \"a,b|c,d\" " + data("mc_example.json"));
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"].size() == 2);
    CHECK(j["edges"].size() == 8);

    r = run("mc --op restrict --blocks \"a,b\" " + data("mc_example.json"));
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["edges"].size() == 1);
}

TEST_CASE("verify subcommand exits zero on passing suites") {
    RunResult r = run("verify --suite coassoc --max-n 3 --count 5 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("exit codes") {
    // usage error
    CHECK(run("chromatic --variant bogus " + data("t3.json")).code == 2);
    CHECK(run("nonsense").code == 2);
    // invalid inputs
    CHECK(run("chromatic " + data("invalid_edge.json")).code == 2);
    CHECK(run("chromatic " + data("not_json.json")).code == 2);
    CHECK(run("mc --op kappa " + data("invalid_order.json")).code == 2);
    CHECK(run("chromatic " + data("missing_file.json")).code == 2);
    // resource cap
    CHECK(run("--enum-cap 3 chromatic " + data("t4.json")).code == 3);
    CHECK(run("--orient-cap 2 orientations --op sums " + data("t3.json")).code == 3);
}

TEST_CASE("determinism of seeded verification output") {
    RunResult a = run("verify --suite chromatic-oracle --max-n 3 --count 4 --seed 9");
    RunResult b = run("verify --suite chromatic-oracle --max-n 3 --count 4 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
