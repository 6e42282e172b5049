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
// Named, replayable property checks. Each check draws inputs from a seeded
// generator, serialises them as strings (words in the letter syntax, index
// sequences as digit strings) and reduces them to a pair of strings that must
// agree. Reports keep a few witnesses and the first counterexample so that a
// report can be re-executed and tampering detected.

#ifndef NILCOH_VERIFY_HPP
#define NILCOH_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilcoh/sampling.hpp"

namespace nilcoh {

struct CheckConfig {
    int q = 2;
    int k = 3;
    int max_word_length = kDefaultMaxWordLength;
};

using CheckInputs = std::vector<std::string>;
using CheckSides = std::pair<std::string, std::string>;

struct CheckDefinition {
    std::string name;
    std::string module;
    std::string description;
    // Whether the check makes sense for the configuration (e.g. k >= 3).
    std::function<bool(const CheckConfig&)> applicable;
    std::function<CheckInputs(Rng&, const CheckConfig&)> generate;
    std::function<CheckSides(const CheckConfig&, const CheckInputs&)> evaluate;
};

// Every registered check. Module "transcription" holds the literal
// transcriptions of the reference formulas; it is not part of "all".
const std::vector<CheckDefinition>& check_registry();
const CheckDefinition& find_check(const std::string& name);
std::vector<std::string> check_modules();

struct CheckSample {
    CheckInputs inputs;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    std::string module;
    CheckConfig config;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::vector<CheckSample> witnesses;
    std::optional<CheckSample> counterexample;

    bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kWitnessCount = 2;

CheckResult run_check(const CheckDefinition& check, const CheckConfig& config, std::uint64_t seed,
                      std::size_t samples);

struct VerificationReport {
    std::string suite;
    CheckConfig config;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<CheckResult> results;

    bool passed() const;
};

// suite: a module name, "all", or a single check name.
VerificationReport run_suite(const std::string& suite, const CheckConfig& config, std::uint64_t seed,
                             std::size_t samples);

nlohmann::ordered_json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& json);

struct ReplayOutcome {
    std::string check;
    CheckSample recorded;
    CheckSides recomputed;
    bool reproduced;  // recomputed sides equal the recorded ones
    bool holds;       // recomputed sides agree with each other
};

// Re-executes every recorded witness and counterexample.
std::vector<ReplayOutcome> replay(const VerificationReport& report);
nlohmann::ordered_json to_json(const std::vector<ReplayOutcome>& outcomes);

}  // namespace nilcoh

#endif  // NILCOH_VERIFY_HPP
