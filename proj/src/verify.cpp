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
#include <algorithm>
#include <exception>

#include "nilcoh/verify.hpp"

namespace nilcoh {

namespace {

// FNV-1a, so per-check seeds do not depend on registry order.
std::uint64_t stable_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

nlohmann::ordered_json sample_json(const CheckSample& s) {
    return {{"inputs", s.inputs}, {"lhs", s.lhs}, {"rhs", s.rhs}};
}

CheckSample sample_from_json(const nlohmann::json& j) {
    return {j.at("inputs").get<CheckInputs>(), j.at("lhs").get<std::string>(), j.at("rhs").get<std::string>()};
}

}  // namespace

CheckResult run_check(const CheckDefinition& check, const CheckConfig& config, std::uint64_t seed,
                      std::size_t samples) {
    CheckResult result{check.name, check.module, config, 0, 0, {}, std::nullopt};
    if (!check.applicable(config)) return result;
    const std::uint64_t base = Rng::shard_seed(seed, stable_hash(check.name));
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(Rng::shard_seed(base, i));
        CheckSample sample;
        sample.inputs = check.generate(rng, config);
        std::tie(sample.lhs, sample.rhs) = check.evaluate(config, sample.inputs);
        ++result.samples;
        if (sample.lhs != sample.rhs) {
            ++result.failures;
            if (!result.counterexample) result.counterexample = sample;
        } else if (result.witnesses.size() < kWitnessCount) {
            result.witnesses.push_back(std::move(sample));
        }
    }
    return result;
}

bool VerificationReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

VerificationReport run_suite(const std::string& suite, const CheckConfig& config, std::uint64_t seed,
                             std::size_t samples) {
    if (config.q < 1 || config.k < 2) throw PreconditionError("verify needs q >= 1 and k >= 2");
    if (config.max_word_length < 1) throw PreconditionError("max word length must be positive");
    VerificationReport report{suite, config, seed, samples, {}};
    bool matched = false;
    for (const CheckDefinition& check : check_registry()) {
        const bool selected = suite == "all" ? check.module != "transcription"
                                             : (check.module == suite || check.name == suite);
        if (!selected) continue;
        matched = true;
        report.results.push_back(run_check(check, config, seed, samples));
    }
    if (!matched) throw PreconditionError("unknown suite: " + suite);
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& r : report.results) {
        nlohmann::ordered_json entry{{"name", r.name},
                                     {"module", r.module},
                                     {"samples", r.samples},
                                     {"failures", r.failures},
                                     {"passed", r.passed()}};
        nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
        for (const CheckSample& s : r.witnesses) witnesses.push_back(sample_json(s));
        entry["witnesses"] = std::move(witnesses);
        entry["counterexample"] = r.counterexample ? sample_json(*r.counterexample) : nlohmann::ordered_json();
        checks.push_back(std::move(entry));
    }
    return {{"schema", 1},
            {"suite", report.suite},
            {"q", report.config.q},
            {"k", report.config.k},
            {"max_word_length", report.config.max_word_length},
            {"seed", report.seed},
            {"samples", report.samples},
            {"passed", report.passed()},
            {"checks", std::move(checks)}};
}

VerificationReport report_from_json(const nlohmann::json& json) {
    if (json.value("schema", 0) != 1) throw PreconditionError("unsupported report schema");
    VerificationReport report;
    report.suite = json.at("suite").get<std::string>();
    report.config.q = json.at("q").get<int>();
    report.config.k = json.at("k").get<int>();
    report.config.max_word_length = json.value("max_word_length", kDefaultMaxWordLength);
    report.seed = json.at("seed").get<std::uint64_t>();
    report.samples = json.at("samples").get<std::size_t>();
    for (const auto& c : json.at("checks")) {
        CheckResult r;
        r.name = c.at("name").get<std::string>();
        r.module = c.at("module").get<std::string>();
        r.config = report.config;
        r.samples = c.at("samples").get<std::size_t>();
        r.failures = c.at("failures").get<std::size_t>();
        for (const auto& w : c.at("witnesses")) r.witnesses.push_back(sample_from_json(w));
        if (c.contains("counterexample") && !c.at("counterexample").is_null()) {
            r.counterexample = sample_from_json(c.at("counterexample"));
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

std::vector<ReplayOutcome> replay(const VerificationReport& report) {
    std::vector<ReplayOutcome> out;
    for (const CheckResult& r : report.results) {
        const CheckDefinition& check = find_check(r.name);
        std::vector<CheckSample> recorded = r.witnesses;
        if (r.counterexample) recorded.push_back(*r.counterexample);
        for (const CheckSample& s : recorded) {
            const CheckSides sides = check.evaluate(report.config, s.inputs);
            out.push_back({r.name, s, sides, sides.first == s.lhs && sides.second == s.rhs,
                           sides.first == sides.second});
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const std::vector<ReplayOutcome>& outcomes) {
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    bool all = true;
    for (const ReplayOutcome& o : outcomes) {
        all = all && o.reproduced;
        items.push_back({{"check", o.check},
                         {"inputs", o.recorded.inputs},
                         {"lhs", o.recomputed.first},
                         {"rhs", o.recomputed.second},
                         {"reproduced", o.reproduced},
                         {"holds", o.holds}});
    }
    return {{"schema", 1}, {"reproduced", all}, {"replays", std::move(items)}};
}

}  // namespace nilcoh
