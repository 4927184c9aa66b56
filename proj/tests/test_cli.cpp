#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#ifndef KOCHENLAB_BIN
#define KOCHENLAB_BIN "./kochenlab"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(KOCHENLAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("operator evaluation output") {
    RunResult r = run("gamma --p 3 --tau 1,1 --t + --x 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"value\":\"2/35\",\"valuation\":0,\"case\":\"ResRootPos\"}\n");
}

TEST_CASE("membership query") {
    RunResult r = run("rings member --p 3 --tau 1,1 --n 1 --x 1/2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\":\"Member\"") != std::string::npos);
    RunResult r2 = run("rings member --p 3 --tau 1,1 --n 1 --x 1/3");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("\"verdict\":\"NonMember\"") != std::string::npos);
    CHECK(r2.out.find("\"val_p\":true") != std::string::npos);
}

TEST_CASE("exit code taxonomy") {
    CHECK(run("dioph compile-holo --p 3 --n 1").exit_code == 3); // budget
    CHECK(run("gamma --p 4 --tau 1,1 --x 2").exit_code == 2);    // not a prime
    CHECK(run("gamma --p 3 --bogus").exit_code == 2);            // unknown flag
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("verify --suite nosuch").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify suites pass") {
    RunResult r = run("verify --suite nf --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\":\"ok\"") != std::string::npos);
    CHECK(run("verify --suite brauer --seed 3").exit_code == 0);
}

TEST_CASE("deterministic output bytes") {
    for (const std::string& args :
         {std::string("verify --suite dioph --seed 5"),
          std::string("dioph compile-r --p 3 --n 1 --x 2/35"),
          std::string("brauer sample-t --a 2 --b 5 --height 3"),
          std::string("nf kill-check --p 2 --tau 1,1 --a 1/2")}) {
        RunResult a = run(args), b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("number field decomposition output") {
    RunResult r = run("nf primes --h T^2+1 --p 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"primes\":[{\"e\":1,\"f\":1},{\"e\":1,\"f\":1}]") != std::string::npos);
    CHECK(r.out.find("\"sum_ef\":2") != std::string::npos);
    RunResult r2 = run("nf primes --h T^2+1 --p 2");
    CHECK(r2.out.find("{\"e\":2,\"f\":1}") != std::string::npos);
}

TEST_CASE("outputs conform to the shipped schemas") {
    auto load = [](const std::string& name) {
        std::ifstream in(std::string(KOCHENLAB_SCHEMAS) + "/" + name);
        REQUIRE(in.good());
        nlohmann::json j;
        in >> j;
        return j;
    };
    // structural conformance: required keys present, no unknown top-level
    // keys, enum fields within range
    auto conform = [](const nlohmann::json& schema, const nlohmann::json& doc) {
        for (const auto& req : schema.at("required")) CHECK(doc.contains(req.get<std::string>()));
        if (schema.value("additionalProperties", true) == false)
            for (const auto& [key, val] : doc.items())
                CHECK(schema.at("properties").contains(key));
        for (const auto& [key, prop] : schema.at("properties").items())
            if (prop.contains("enum") && doc.contains(key)) {
                bool found = false;
                for (const auto& e : prop.at("enum")) found = found || e == doc.at(key);
                CHECK(found);
            }
    };
    nlohmann::json gamma = load("gamma.json"), member = load("membership.json"),
                   family = load("family.json");
    conform(gamma, nlohmann::json::parse(run("gamma --p 3 --tau 1,1 --t + --x 2").out));
    conform(gamma, nlohmann::json::parse(run("gamma --p 2 --tau 1,1 --t + --x 1").out));
    conform(member,
            nlohmann::json::parse(run("rings member --p 3 --tau 1,1 --n 1 --x 1/3").out));
    conform(member,
            nlohmann::json::parse(run("rings member --p 3 --tau 1,1 --n 1 --x 0").out));
    conform(family, nlohmann::json::parse(run("dioph compile-r --p 3 --n 1").out)
                        .at("family"));
}

TEST_CASE("quaternion construction output") {
    RunResult r = run("brauer construct --p 5 --q1 2 --q2 13");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"ramification_A\":[\"2\",\"5\"]") != std::string::npos);
    CHECK(r.out.find("\"ramification_B\":[\"5\",\"13\"]") != std::string::npos);
}
