#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli_commands.hpp"
#include "padic/arith.hpp"

using padic::cli::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& s) {
    std::vector<Json> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) out.push_back(Json::parse(line));
    }
    return out;
}

}  // namespace

TEST_CASE("density examples") {
    auto r = run({"density", "--family", "a1", "--p", "3", "--n", "3", "--b1", "0", "--method", "closed"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["p_max"] == "8/9");

    r = run({"density", "--family", "an-fixed", "--p", "3", "--n", "2", "--bn", "2", "--method", "oracle"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["p_sqf"] == "1/1");

    r = run({"density", "--family", "all", "--p", "2", "--n", "2", "--method", "engine"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["p_max"] == "3/4");
}

TEST_CASE("density JSON schema and parameter echo") {
    const auto r = run({"density", "--family", "a1a2", "--p", "5", "--n", "4", "--b1", "-1", "--b2", "12"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    for (const char* key :
         {"command", "family", "p", "n", "params", "method", "p0_sqf", "p1_sqf", "p_sqf", "p_max", "timing_ms"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["command"] == "density");
    CHECK(j["params"]["b1"] == 4);
    CHECK(j["params"]["b2"] == 2);
    CHECK(j["method"] == "closed");
    const padic::Rational sum = padic::parse_fraction(j["p0_sqf"].get<std::string>()) + padic::parse_fraction(j["p1_sqf"].get<std::string>());
    CHECK(padic::to_fraction_string(sum) == j["p_sqf"].get<std::string>());
}

TEST_CASE("deterministic output is byte-identical") {
    const std::vector<std::string> args{"density", "--family", "a1-an-unit", "--p", "3", "--n", "4",
                                        "--b1", "2", "--method", "oracle", "--deterministic"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(Json::parse(a.out).contains("timing_ms"));
}

TEST_CASE("csv output mirrors the JSON fields") {
    const auto r = run({"density", "--family", "all", "--p", "3", "--n", "3", "--format", "csv", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(
        run({"density", "--family", "all", "--p", "3", "--n", "3", "--deterministic"}).out);
    std::istringstream is(r.out);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "command,family,p,n,params,method,p0_sqf,p1_sqf,p_sqf,p_max");
    CHECK(row == "density,all,3,3,,closed," + j["p0_sqf"].get<std::string>() + "," + j["p1_sqf"].get<std::string>() +
                     "," + j["p_sqf"].get<std::string>() + "," + j["p_max"].get<std::string>());
    const auto r2 = run({"density", "--family", "a1a2", "--p", "3", "--n", "3", "--b1", "0", "--b2", "1", "--format",
                         "csv", "--deterministic"});
    CHECK(r2.out.find(",b1=0;b2=1,") != std::string::npos);
}

TEST_CASE("every method agrees through the CLI") {
    for (const char* fam : {"all", "an-unit", "unit-unit-1n", "unit-unit-n1n"}) {
        std::vector<std::string> results;
        for (const char* m : {"closed", "engine", "oracle"}) {
            auto j = Json::parse(
                run({"density", "--family", fam, "--p", "3", "--n", "4", "--method", m, "--deterministic"}).out);
            j.erase("method");
            results.push_back(j.dump());
        }
        CHECK(results[0] == results[1]);
        CHECK(results[0] == results[2]);
    }
}

TEST_CASE("exit code 2 on bad input") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "3"}).code == 2);
    CHECK(run({"density", "--family", "nope", "--p", "3", "--n", "3"}).code == 2);
    CHECK(run({"density", "--family", "a1", "--p", "3", "--n", "3"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "4", "--n", "3"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "3", "--n", "1"}).code == 2);
    CHECK(run({"density", "--family", "a1a2", "--p", "3", "--n", "2", "--b1", "0", "--b2", "0"}).code == 2);
    CHECK(run({"density", "--family", "an-fixed", "--p", "3", "--n", "3", "--bn", "3"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "3", "--n", "3", "--method", "guess"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "3", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run({"density", "--family", "all", "--p", "x", "--n", "3"}).code == 2);
    CHECK(run({"euler", "--set", "nope"}).code == 2);
    CHECK(run({"euler", "--kind", "nope"}).code == 2);
    CHECK(run({"verify", "--families", "nope"}).code == 2);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("density") != std::string::npos);
}

TEST_CASE("exit code 3 when the oracle budget is exceeded") {
    const auto r = run({"density", "--family", "all", "--p", "5", "--n", "6", "--method", "oracle", "--budget", "1000"});
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("verify passes on small grids") {
    auto r = run({"verify", "--pmax", "3", "--nmax", "4"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(!rows.empty());
    CHECK(rows.back()["mismatches"] == 0);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(rows[i]["status"] == "ok");
        CHECK(rows[i]["closed"] == rows[i]["oracle"]);
    }

    r = run({"verify", "--pmax", "2", "--nmax", "8"});
    CHECK(r.code == 0);
    rows = lines(r.out);
    CHECK(rows.size() - 1 >= 7 * 8);
}

TEST_CASE("verify reports skipped tuples over budget") {
    const auto r = run({"verify", "--pmax", "3", "--nmax", "4", "--families", "all,a1", "--budget", "1000"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    CHECK(rows.back()["skipped"].get<int>() > 0);
}

TEST_CASE("an injected fault is caught") {
    const auto r = run({"verify", "--pmax", "3", "--nmax", "3", "--inject-fault"});
    CHECK(r.code == 1);
    CHECK(r.err.find("first mismatch") != std::string::npos);
    CHECK(lines(r.out).back()["mismatches"] == 1);
}

TEST_CASE("euler examples") {
    auto r = run({"euler", "--set", "const", "--kind", "sqf", "--n", "2", "--bound", "100000"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    const double v = std::stod(j["value"].get<std::string>());
    CHECK(std::abs(v - 0.405285) < 1e-3);
    CHECK(std::stod(j["lower"].get<std::string>()) <= 0.4052847346);
    CHECK(std::stod(j["upper"].get<std::string>()) >= 0.4052847346);

    r = run({"euler", "--set", "const", "--kind", "max", "--n", "2", "--bound", "100000"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(Json::parse(r.out)["value"].get<std::string>()) - 0.607927) < 1e-3);

    r = run({"euler", "--set", "const", "--kind", "sqf", "--n", "2", "--bound", "2", "--deterministic"});
    REQUIRE(r.code == 0);
    j = Json::parse(r.out);
    CHECK(std::stod(j["value"].get<std::string>()) == 0.5);
    CHECK(j["factor_count"] == 1);
    CHECK(std::stod(j["lower"].get<std::string>()) < 0.25);
}
