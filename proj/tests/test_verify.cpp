/* Copyright 2026 The nilcoh Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <doctest.h>

#include <set>

#include "nilcoh/verify.hpp"

using namespace nilcoh;

TEST_CASE("registry") {
    std::set<std::string> names;
    for (const auto& c : check_registry()) {
        CHECK(names.insert(c.name).second);
        CHECK_FALSE(c.description.empty());
    }
    CHECK(check_modules() ==
          std::vector<std::string>{"words", "magnus", "cochain", "cocycle3", "topology", "derham", "transcription"});
    CHECK(find_check("massey2_cocycle").module == "cochain");
    CHECK_THROWS_AS(find_check("nope"), PreconditionError);
}

TEST_CASE("every module passes a short sweep") {
    for (const CheckConfig config : {CheckConfig{2, 3, 10}, CheckConfig{3, 2, 8}, CheckConfig{1, 3, 8}}) {
        const auto report = run_suite("all", config, 1, 15);
        CHECK(report.passed());
        for (const auto& r : report.results) {
            CHECK(r.module != "transcription");
            if (!r.passed()) MESSAGE(r.name << ": " << r.counterexample->lhs << " vs " << r.counterexample->rhs);
        }
    }
}

TEST_CASE("checks that do not apply are skipped") {
    const auto report = run_suite("cocycle3", CheckConfig{2, 2, 8}, 1, 5);
    std::size_t skipped = 0;
    for (const auto& r : report.results) skipped += r.samples == 0 ? 1 : 0;
    CHECK(skipped > 0);
    CHECK(report.passed());
}

TEST_CASE("transcription checks fail with a counterexample") {
    const auto report = run_suite("transcription", CheckConfig{}, 7, 30);
    CHECK_FALSE(report.passed());
    for (const auto& r : report.results) {
        CHECK_FALSE(r.passed());
        REQUIRE(r.counterexample.has_value());
        CHECK(r.counterexample->lhs != r.counterexample->rhs);
    }
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
    const auto a = to_json(run_suite("cochain", CheckConfig{}, 99, 10)).dump();
    const auto b = to_json(run_suite("cochain", CheckConfig{}, 99, 10)).dump();
    CHECK(a == b);
    CHECK(a != to_json(run_suite("cochain", CheckConfig{}, 100, 10)).dump());
    const auto json = nlohmann::json::parse(a);
    CHECK(json.at("schema") == 1);
    CHECK(to_json(report_from_json(json)).dump() == a);
    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"schema", 2}}), PreconditionError);
}

TEST_CASE("single checks run by name") {
    const auto report = run_suite("witt_vs_enumeration", CheckConfig{}, 3, 4);
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].samples == 4);
    CHECK(report.results[0].witnesses.size() == kWitnessCount);
    CHECK_THROWS_AS(run_suite("no_such_suite", CheckConfig{}, 3, 4), PreconditionError);
    CHECK_THROWS_AS(run_suite("all", CheckConfig{2, 1, 8}, 3, 4), PreconditionError);
}

TEST_CASE("replay reproduces recorded samples and detects tampering") {
    const auto passing = run_suite("magnus", CheckConfig{}, 5, 6);
    for (const auto& o : replay(passing)) {
        CHECK(o.reproduced);
        CHECK(o.holds);
    }
    const auto failing = run_suite("literal_census_count", CheckConfig{}, 5, 20);
    const auto outcomes = replay(failing);
    REQUIRE_FALSE(outcomes.empty());
    bool some_fail = false;
    for (const auto& o : outcomes) {
        CHECK(o.reproduced);
        some_fail |= !o.holds;
    }
    CHECK(some_fail);

    auto json = nlohmann::json::parse(to_json(passing).dump());
    json["checks"][0]["witnesses"][0]["rhs"] = "tampered";
    const auto tampered = replay(report_from_json(json));
    CHECK_FALSE(tampered.front().reproduced);
    CHECK(tampered.front().holds);
}
