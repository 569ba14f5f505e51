#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "cubicloc/counting.hpp"
#include "cubicloc/sieves.hpp"

// End-to-end checks of the installed command grammar: stdout payloads,
// exit codes, usage rejection. Each case shells out to the built binary.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code{};
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CUBICLOC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) res.out += buf.data();
    const int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace

TEST_CASE("admissible table and fixture verification") {
    const auto table = run("admissible");
    CHECK(table.exit_code == 0);
    CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 252);
    CHECK(table.out.substr(0, 4) == "1,1\n");

    const auto verify = run(std::string("admissible --verify ") + CUBICLOC_FIXTURE_PATH);
    CHECK(verify.exit_code == 0);
    CHECK(verify.out == "252 pairs, 0 diffs\n");

    const auto as_json = run("admissible --format json");
    CHECK(as_json.exit_code == 0);
    const json j = json::parse(as_json.out);
    CHECK(j.at("count") == 252);
    CHECK(j.at("row_counts").at("1") == 18);
    CHECK(j.at("row_counts").at("2") == 12);
}

TEST_CASE("solvable reports") {
    const auto bad = run("solvable 7 2");
    CHECK(bad.exit_code == 0);
    const json j = json::parse(bad.out);
    CHECK(j.at("everywhere_soluble") == false);
    bool failing_seven = false;
    for (const auto& v : j.at("verdicts"))
        if (v.at("prime") == 7 && v.at("soluble") == false) failing_seven = true;
    CHECK(failing_seven);

    const auto good = run("solvable 2 1");
    CHECK(json::parse(good.out).at("everywhere_soluble") == true);

    const auto one_prime = run("solvable 7 2 --prime 7 --oracle");
    const json vj = json::parse(one_prime.out);
    CHECK(vj.at("soluble") == false);
    CHECK(vj.at("reason") == "OracleSearch");

    // fast path refuses forms outside the counting predicate
    const auto refused = run("solvable 4 2");
    CHECK(refused.exit_code == 1);
    // the oracle accepts them
    const auto oracle = run("solvable 4 2 --oracle");
    CHECK(oracle.exit_code == 0);
}

TEST_CASE("count command and mode agreement through the CLI") {
    const auto fast = run("count 300 300");
    CHECK(fast.exit_code == 0);
    const json jf = json::parse(fast.out);
    CHECK(jf.at("count") == 5033);
    CHECK(jf.at("method") == "FastPath");

    const auto oracle = run("count 300 300 --oracle");
    const json jo = json::parse(oracle.out);
    CHECK(jo.at("count") == jf.at("count"));
    CHECK(jo.at("method") == "Oracle");

    const auto small = run("count 2 2");
    CHECK(json::parse(small.out).at("count") == 3);

    // single- and multi-thread runs must agree
    const auto t1 = run("count 5000 5000 --threads 1");
    const auto t4 = run("count 5000 5000 --threads 4");
    CHECK(json::parse(t1.out).at("count") == json::parse(t4.out).at("count"));
}

TEST_CASE("constant and compare emit well-formed reports") {
    const auto cst = run("constant --primes 5000 --digits 20");
    CHECK(cst.exit_code == 0);
    const json j = json::parse(cst.out);
    CHECK(j.at("P") == 5000);
    CHECK(j.at("c2").is_string());
    const double c2 = j.at("c2_double").get<double>();
    CHECK(c2 > 0.38);
    CHECK(c2 < 0.40);

    const auto cmp = run("compare 500 500 --primes 2000");
    CHECK(cmp.exit_code == 0);
    const json cj = json::parse(cmp.out);
    for (const char* k : {"A", "B", "N", "c2", "P", "predicted", "ratio", "error_budget"})
        CHECK(cj.contains(k));
    CHECK(cj.at("ratio").get<double>() > 0);
}

TEST_CASE("oscillate emits csv") {
    const auto dbl = run("oscillate double 100 100 1 0");
    CHECK(dbl.exit_code == 0);
    CHECK(dbl.out.rfind("A,B,s,t,term_count,re,im,normalized\n", 0) == 0);
    CHECK(std::count(dbl.out.begin(), dbl.out.end(), '\n') == 2);

    const auto sng = run("oscillate single 100 4 7 1 1");
    CHECK(sng.exit_code == 0);
    CHECK(sng.out.rfind("B,m,d2,d3,i,weighted,term_count,re,im,normalized\n", 0) == 0);

    const auto rejected = run("oscillate double 100 100 0 0");
    CHECK(rejected.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("count 300").exit_code == 2);              // missing argument
    CHECK(run("count 300 300 --frobnicate").exit_code == 2);  // unknown flag rejected
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("solvable -1 2").exit_code == 2);          // domain check at parse time
    CHECK(run("").exit_code == 2);
}

TEST_CASE("json outputs round-trip through parse and re-emit") {
    for (const std::string args :
         {std::string("solvable 10 7"), std::string("count 40 40"),
          std::string("constant --primes 2000"), std::string("compare 100 100 --primes 2000")}) {
        const auto r = run(args);
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(json::parse(j.dump()) == j);
    }
}
