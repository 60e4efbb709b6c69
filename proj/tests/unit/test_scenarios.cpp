/*
   Copyright 2026 The valfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "valfield/core/errors.hpp"
#include "valfield/scenarios/scenarios.hpp"

using namespace valfield;
using namespace valfield::scenarios;

namespace {

std::map<std::string, ClaimStatus> statuses(const VerificationReport& r) {
    std::map<std::string, ClaimStatus> out;
    for (const auto& c : r.claims) out[c.id] = c.status;
    return out;
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "valfield");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    return code;
}

}  // namespace

TEST_CASE("every scenario passes with default parameters") {
    for (const auto& name : scenario_names()) {
        CAPTURE(name);
        const auto r = run_scenario(name, ScenarioParams{});
        CHECK(r.passed());
        CHECK(r.scenario == name);
        for (const auto& c : r.claims) {
            CAPTURE(c.id);
            CHECK(c.status != ClaimStatus::failed);
            CHECK_FALSE(c.paper_location.empty());
            CHECK_FALSE(c.description.empty());
            if (c.status == ClaimStatus::assumed) CHECK(c.certificate.contains("justification"));
        }
    }
}

TEST_CASE("scenario claims in characteristic 3") {
    ScenarioParams params;
    params.p = 3;
    for (const auto& name : scenario_names()) {
        CAPTURE(name);
        const auto r = run_scenario(name, params);
        if (name != "appendix-non-ake") {
            CHECK(r.passed());
            continue;
        }
        // X^3 + 1 = (X + 1)^3 in characteristic 3: the cubic is singular and
        // X = u^2 - 1 gives the nonconstant point Y = u^3.
        const auto s = statuses(r);
        CHECK(s.at("curve-smooth") == ClaimStatus::failed);
        CHECK(s.at("bounded-curve-search") == ClaimStatus::failed);
        CHECK(s.at("omega-two-distinct") == ClaimStatus::verified);
        CHECK(s.at("t-point-in-L") == ClaimStatus::verified);
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("reports are deterministic") {
    for (const auto& name : scenario_names()) {
        CAPTURE(name);
        CHECK(run_scenario(name, ScenarioParams{}).json_text() == run_scenario(name, ScenarioParams{}).json_text());
    }
}

TEST_CASE("more precision never turns a verified claim into a failure") {
    for (const char* name : {"hiding-example", "tame-hiding", "fully-tame-CAKE", "no-mix-ake", "tame-Hahn-corollary"}) {
        CAPTURE(name);
        for (std::int64_t p : {3, 5}) {
            std::map<std::string, ClaimStatus> previous;
            for (int level = 1; level <= 4; ++level) {
                ScenarioParams params;
                params.p = p;
                params.witt_length = level;
                params.hahn_precision = 2 * level;
                params.ram_depth = 1;
                const auto now = statuses(run_scenario(name, params));
                for (const auto& [id, st] : previous) {
                    CAPTURE(id);
                    if (st == ClaimStatus::verified) CHECK(now.at(id) != ClaimStatus::failed);
                }
                previous = now;
            }
        }
    }
}

TEST_CASE("witness and refutation never both succeed") {
    for (const char* name : {"first-CAKE-counterex", "fully-tame-CAKE", "no-mix-ake"}) {
        for (int m : {0, 1, 2}) {
            ScenarioParams params;
            params.ram_depth = m;
            const auto s = statuses(run_scenario(name, params));
            CHECK(s.at("soundness") == ClaimStatus::verified);
        }
    }
}

TEST_CASE("report JSON layout") {
    const auto r = run_scenario("fully-tame-CAKE", ScenarioParams{});
    const auto j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"version", "scenario", "parameters", "claims"});
    const auto& c = j["claims"][0];
    std::vector<std::string> claim_keys;
    for (const auto& [k, v] : c.items()) claim_keys.push_back(k);
    CHECK(claim_keys == std::vector<std::string>{"id", "description", "paper_location", "status", "certificate"});
    CHECK(j["parameters"]["p"] == 5);
    const auto pointed = std::find_if(r.claims.begin(), r.claims.end(), [](const Claim& x) { return x.id == "pointed-value-groups"; });
    REQUIRE(pointed != r.claims.end());
    CHECK(pointed->certificate["v_1"]["2-divisible"] == false);
    CHECK(pointed->certificate["v_2"]["2-divisible"] == true);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(run_scenario("no-such", ScenarioParams{}), DomainError);
    ScenarioParams bad;
    bad.p = 11;
    CHECK_THROWS_AS(run_scenario("hiding-example", bad), DomainError);
    bad = {};
    bad.witt_length = 5;
    CHECK_THROWS_AS(run_scenario("hiding-example", bad), DomainError);
    bad = {};
    bad.search_bound = 4;
    CHECK_THROWS_AS(run_scenario("appendix-non-ake", bad), DomainError);
    bad = {};
    bad.ram_depth = -1;
    CHECK_THROWS_AS(run_scenario("tame-hiding", bad), DomainError);
}

TEST_CASE("command line") {
    std::string out;
    CHECK(run_cli({"oag", "e1 - e2", "divisible-by", "2"}, &out) == 0);
    CHECK(out == "false\n");
    CHECK(run_cli({"oag", "2*e1 - 4/p*e2", "divide", "2"}, &out) == 0);
    CHECK(out == "e1 - 2/p*e2\n");
    CHECK(run_cli({"oag", "e3", "quotient", "1"}, &out) == 0);
    CHECK(out == "0\n");
    CHECK(run_cli({"verify", "no-such"}) != 0);
    CHECK(run_cli({"verify", "hiding-example", "--p", "11"}) != 0);
    CHECK(run_cli({"frobnicate"}) != 0);
    CHECK(run_cli({"list-scenarios"}, &out) == 0);
    CHECK(std::count(out.begin(), out.end(), '\n') == 8);

    const auto path = std::filesystem::temp_directory_path() / "valfield_cli_report.json";
    std::filesystem::remove(path);
    CHECK(run_cli({"verify", "fully-tame-CAKE", "--p", "5", "--json", path.string()}) == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run_scenario("fully-tame-CAKE", ScenarioParams{}).json_text());
    std::filesystem::remove(path);

    CHECK(run_cli({"verify", "appendix-non-ake", "--p", "3", "--quiet"}, &out) == 1);
    CHECK(out == "FAIL\n");

    CHECK(run_cli({"witt", "mul", "(2, 1)", "(2, 0)", "--p", "3"}, &out) == 0);
    CHECK(run_cli({"hahn", "is-square", "3*t^[e1]"}, &out) == 0);
    CHECK(out.rfind("false", 0) == 0);
}
