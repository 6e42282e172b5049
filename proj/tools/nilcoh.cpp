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
// nilcoh: command-line front end for computations in free nilpotent quotients.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "nilcoh/cocycle3.hpp"
#include "nilcoh/derham.hpp"
#include "nilcoh/extension.hpp"
#include "nilcoh/topology.hpp"
#include "nilcoh/upsilon.hpp"
#include "nilcoh/verify.hpp"

namespace {

using nilcoh::Integer;
using nilcoh::PreconditionError;
using nilcoh::Sequence;
using nilcoh::Word;
using Json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for results that are computed but negative (verification failures).
struct VerificationFailed {};

struct Globals {
    bool json = false;
};

Json document() { return Json{{"schema", 1}}; }

void emit(const Globals& g, const Json& doc, const std::string& text) {
    if (g.json) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

int max_degree() {
    const char* env = std::getenv("NILCOH_MAX_DEGREE");
    if (env == nullptr || *env == '\0') return 8;
    try {
        const int v = std::stoi(env);
        if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw PreconditionError(fmt::format("NILCOH_MAX_DEGREE must be a positive integer, got '{}'", env));
}

void require_degree(const std::string& what, int degree) {
    const int cap = max_degree();
    if (degree > cap) {
        throw PreconditionError(
            fmt::format("{} = {} exceeds the degree cap {} (set NILCOH_MAX_DEGREE to raise it)", what, degree, cap));
    }
}

void require_rank(int q) {
    if (q < 1) throw PreconditionError("q >= 1 required");
}

void require_level(int k) {
    if (k < 2) throw PreconditionError("k >= 2 required");
    require_degree("k", k);
}

Sequence parse_index(const std::string& text, int q) {
    Sequence i = nilcoh::parse_sequence(text);
    for (int letter : i) {
        if (letter < 1 || letter > q) {
            throw PreconditionError(fmt::format("index {} uses a generator outside 1..{}", text, q));
        }
    }
    require_degree("index length", static_cast<int>(i.size()));
    return i;
}

Word parse_word_in(const std::string& text, int q) {
    Word w = nilcoh::parse_word(text);
    if (w.max_generator() > q) {
        throw PreconditionError(fmt::format("word '{}' uses a generator beyond x{}", text, q));
    }
    return w;
}

std::string seq_text(const Sequence& s) { return nilcoh::sequence_to_string(s); }

// --- witt / lyndon -----------------------------------------------------------

void add_witt(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("witt", "Witt number N_k: the rank of F_k/F_{k+1}");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "weight")->required();
    cmd->callback([&g, q, k] {
        require_rank(*q);
        if (*k < 1) throw PreconditionError("k >= 1 required");
        require_degree("k", *k);
        const auto n = nilcoh::witt_number(*q, *k);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["value"] = n.value.str();
        emit(g, doc, n.value.str() + "\n");
    });
}

void add_lyndon(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("lyndon", "standard sequences of length k over 1..q");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "length")->required();
    cmd->callback([&g, q, k] {
        require_rank(*q);
        if (*k < 1) throw PreconditionError("k >= 1 required");
        require_degree("k", *k);
        const auto list = nilcoh::standard_sequences(*q, *k);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["sequences"] = Json::array();
        std::string text;
        for (const Sequence& s : list) {
            doc["sequences"].push_back(seq_text(s));
            text += seq_text(s) + "\n";
        }
        emit(g, doc, text);
    });
}

// --- magnus / upsilon ----------------------------------------------------------

void add_magnus(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("magnus", "Magnus expansion of a word modulo degree k");
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--k", *k, "terms of degree >= k are dropped")->required();
    cmd->add_option("word", *text, "word, e.g. abAB or 'x1 x2 x1^-1'")->required();
    cmd->callback([&g, k, text] {
        if (*k < 1) throw PreconditionError("k >= 1 required");
        require_degree("k", *k);
        const auto p = nilcoh::magnus_expand(nilcoh::parse_word(*text), *k);
        Json doc = document();
        doc["k"] = *k;
        doc["word"] = *text;
        Json terms = Json::object();
        for (const auto& [monomial, coefficient] : p.terms()) terms[seq_text(monomial)] = coefficient.str();
        doc["terms"] = std::move(terms);
        emit(g, doc, nilcoh::to_string(p) + "\n");
    });
}

void add_upsilon(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("upsilon", "unipotent matrix Upsilon_k of a word");
    auto k = std::make_shared<int>(2);
    auto text = std::make_shared<std::string>();
    cmd->add_option("--k", *k, "matrix size k")->required();
    cmd->add_option("word", *text, "word")->required();
    cmd->callback([&g, k, text] {
        if (*k < 1) throw PreconditionError("k >= 1 required");
        require_degree("k", *k);
        const auto m = nilcoh::upsilon(nilcoh::parse_word(*text), *k);
        Json doc = document();
        doc["k"] = *k;
        doc["word"] = *text;
        doc["identity"] = m.is_identity();
        Json entries = Json::array();
        for (int r = 0; r < m.size(); ++r) {
            for (int c = r + 1; c < m.size(); ++c) {
                entries.push_back({{"row", r + 1}, {"column", c + 1}, {"value", nilcoh::to_string(m.entry(r, c))}});
            }
        }
        doc["entries"] = std::move(entries);
        emit(g, doc, nilcoh::to_string(m));
    });
}

// --- cochains --------------------------------------------------------------------

void add_massey2(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("massey2", "value of the Massey 2-cocycle of a standard index");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto index = std::make_shared<std::string>();
    auto words = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "level")->required();
    cmd->add_option("--index", *index, "standard sequence of length k")->required();
    cmd->add_option("words", *words, "two words")->expected(2)->required();
    cmd->callback([&g, q, k, index, words] {
        require_rank(*q);
        require_level(*k);
        const Sequence i = parse_index(*index, *q);
        if (static_cast<int>(i.size()) != *k || !nilcoh::is_standard(i)) {
            throw PreconditionError(fmt::format("index {} must be a standard sequence of length k = {}", *index, *k));
        }
        const nilcoh::Element x(parse_word_in((*words)[0], *q), *k);
        const nilcoh::Element y(parse_word_in((*words)[1], *q), *k);
        const Integer value = nilcoh::massey2(i)({x, y});
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["index"] = seq_text(i);
        doc["words"] = *words;
        doc["value"] = value.str();
        emit(g, doc, value.str() + "\n");
    });
}

void add_pair(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("pair", "pairing of the Massey 2-cocycle with an element of F_k");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto index = std::make_shared<std::string>();
    auto text = std::make_shared<std::string>();
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "level")->required();
    cmd->add_option("--index", *index, "standard sequence of length k")->required();
    cmd->add_option("word", *text, "element of F_k")->required();
    cmd->callback([&g, q, k, index, text] {
        require_rank(*q);
        require_level(*k);
        const Sequence i = parse_index(*index, *q);
        const Word w = parse_word_in(*text, *q);
        const auto basis = nilcoh::standard_sequences(*q, *k);
        const auto pos = std::find(basis.begin(), basis.end(), i);
        if (pos == basis.end()) {
            throw PreconditionError(fmt::format("index {} must be a standard sequence of length k = {}", *index, *k));
        }
        const auto evaluation = nilcoh::evaluate_word_in_extension(w, *q, *k);
        if (!evaluation.in_Fk) throw PreconditionError(fmt::format("word '{}' is not in F_{}", *text, *k));
        const Integer magnus = nilcoh::pairing(i, w);
        const Integer fiber = evaluation.element.fiber.at(static_cast<std::size_t>(pos - basis.begin()));
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["index"] = seq_text(i);
        doc["word"] = *text;
        doc["value"] = magnus.str();
        doc["magnus_path"] = magnus.str();
        doc["extension_path"] = fiber.str();
        doc["agree"] = magnus == fiber;
        emit(g, doc,
             fmt::format("{}\nmagnus path:    {}\nextension path: {}\n", magnus.str(), magnus.str(), fiber.str()));
        if (magnus != fiber) throw VerificationFailed{};
    });
}

// --- 3-cocycles -------------------------------------------------------------------

void add_massey3(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("massey3", "value of the 3-cocycle attached to (s, I), |I| in {k, k+1}");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(3);
    auto s = std::make_shared<int>(1);
    auto index = std::make_shared<std::string>();
    auto words = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "level, at least 3")->required();
    cmd->add_option("--s", *s, "generator s")->required();
    cmd->add_option("--index", *index, "standard sequence of length k or k+1")->required();
    cmd->add_option("words", *words, "three words")->expected(3)->required();
    cmd->callback([&g, q, k, s, index, words] {
        require_rank(*q);
        require_level(*k);
        if (*k < 3) throw PreconditionError("k >= 3 required");
        if (*s < 1 || *s > *q) throw PreconditionError(fmt::format("s must lie in 1..{}", *q));
        const Sequence i = parse_index(*index, *q);
        const int length = static_cast<int>(i.size());
        if (!nilcoh::is_standard(i) || (length != *k && length != *k + 1)) {
            throw PreconditionError(fmt::format("index {} must be standard of length {} or {}", *index, *k, *k + 1));
        }
        const nilcoh::Cochain c =
            length == *k ? nilcoh::gamma3(*s, i, *k) : nilcoh::corrected_3cocycle(*s, i, *k);
        std::vector<nilcoh::Element> args;
        for (const std::string& w : *words) args.emplace_back(parse_word_in(w, *q), *k + 1);
        const Integer value = c.evaluate(args);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["s"] = *s;
        doc["index"] = seq_text(i);
        doc["cocycle"] = length == *k ? "gamma" : "corrected";
        doc["words"] = *words;
        doc["value"] = value.str();
        emit(g, doc, value.str() + "\n");
    });
}

void add_census3(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("census3", "index census for the 3-cocycle basis");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(3);
    auto list = std::make_shared<bool>(false);
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "level")->required();
    cmd->add_flag("--entries", *list, "also list every (s, I)");
    cmd->callback([&g, q, k, list] {
        require_rank(*q);
        require_level(*k);
        require_degree("2k-1", 2 * *k - 1);
        const auto census = nilcoh::census_basis3(*q, *k);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["slices"] = Json::array();
        std::string text = fmt::format("{:>3}  {:>8}  {:>8}  {}\n", "l", "listed", "rank", "emitted");
        for (const auto& slice : census.slices) {
            const bool emitted = slice.length == *k || slice.length == *k + 1;
            doc["slices"].push_back({{"length", slice.length},
                                     {"listed", slice.listed},
                                     {"rank", slice.rank.str()},
                                     {"emitted", emitted}});
            text += fmt::format("{:>3}  {:>8}  {:>8}  {}\n", slice.length, slice.listed, slice.rank.str(),
                                emitted ? "yes" : "no");
        }
        doc["total_listed"] = census.total_listed;
        doc["total_rank"] = census.total_rank.str();
        text += fmt::format("total listed {}, total rank {}\n", census.total_listed, census.total_rank.str());
        if (*list) {
            doc["entries"] = Json::array();
            for (const auto& e : census.entries) {
                doc["entries"].push_back({{"length", e.length},
                                          {"index", seq_text(e.index)},
                                          {"s", e.s},
                                          {"has_expression", e.has_expression}});
                text += fmt::format("  l={} s={} I={}{}\n", e.length, e.s, seq_text(e.index),
                                    e.has_expression ? " *" : "");
            }
        }
        emit(g, doc, text);
    });
}

void add_quotient(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("quotient", "cochains on F/F_{k+1} modulo central standard commutators");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(3);
    auto relators = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "level")->required();
    cmd->add_option("--relators", *relators, "standard sequences of length k, comma separated")
        ->required()
        ->delimiter(',');
    cmd->require_subcommand(1);

    auto build = [q, k, relators] {
        require_rank(*q);
        require_level(*k);
        std::vector<Sequence> list;
        for (const std::string& r : *relators) list.push_back(parse_index(r, *q));
        return nilcoh::CentralQuotientGroup(*q, *k, std::move(list));
    };
    auto relator_slot = [](const nilcoh::CentralQuotientGroup& group, int j) {
        if (j < 1 || j > static_cast<int>(group.relators().size())) {
            throw PreconditionError(fmt::format("--relator must lie in 1..{}", group.relators().size()));
        }
        return static_cast<std::size_t>(j - 1);
    };

    auto* phi = cmd->add_subcommand("phi", "the 2-cocycle phi of a relator");
    auto phi_j = std::make_shared<int>(1);
    auto phi_words = std::make_shared<std::vector<std::string>>();
    phi->add_option("--relator", *phi_j, "1-based relator position")->capture_default_str();
    phi->add_option("words", *phi_words, "two words")->expected(2)->required();
    phi->callback([&g, build, relator_slot, phi_j, phi_words, q, k] {
        const auto group = build();
        const std::size_t j = relator_slot(group, *phi_j);
        const auto x = group.element(parse_word_in((*phi_words)[0], *q));
        const auto y = group.element(parse_word_in((*phi_words)[1], *q));
        const Integer value = nilcoh::phi_cocycle(group, j)({x, y});
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["relator"] = seq_text(group.relators()[j]);
        doc["words"] = *phi_words;
        doc["value"] = value.str();
        emit(g, doc, value.str() + "\n");
    });

    auto* triple = cmd->add_subcommand("triple", "triple Massey product <x_r, phi, x_s>");
    auto r = std::make_shared<int>(1);
    auto s = std::make_shared<int>(1);
    auto triple_j = std::make_shared<int>(1);
    auto triple_words = std::make_shared<std::vector<std::string>>();
    triple->add_option("--r", *r, "left generator")->required();
    triple->add_option("--s", *s, "right generator")->required();
    triple->add_option("--relator", *triple_j, "1-based relator position")->capture_default_str();
    triple->add_option("words", *triple_words, "three words")->expected(3)->required();
    triple->callback([&g, build, relator_slot, r, s, triple_j, triple_words, q, k] {
        const auto group = build();
        const std::size_t j = relator_slot(group, *triple_j);
        std::vector<nilcoh::Element> args;
        for (const std::string& w : *triple_words) args.push_back(group.element(parse_word_in(w, *q)));
        const Integer value = nilcoh::triple_massey(group, *r, j, *s).evaluate(args);
        const bool defined = nilcoh::triple_massey_defined_on_quotient(group, *r, j, *s);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["relator"] = seq_text(group.relators()[j]);
        doc["r"] = *r;
        doc["s"] = *s;
        doc["words"] = *triple_words;
        doc["value"] = value.str();
        doc["defined_on_quotient"] = defined;
        emit(g, doc, fmt::format("{}\ndefined on quotient: {}\n", value.str(), defined ? "yes" : "no"));
    });
}

// --- topology ---------------------------------------------------------------------

// "L=word" or "word"; bare words go to components 1, 2, ... in order.
std::map<int, Word> parse_assignments(const std::vector<std::string>& items, int q, const std::string& flag) {
    std::map<int, Word> out;
    int next = 1;
    for (const std::string& item : items) {
        int slot = next;
        std::string body = item;
        if (const auto eq = item.find('='); eq != std::string::npos) {
            std::string key = item.substr(0, eq);
            if (!key.empty() && key.front() == 'x') key.erase(0, 1);
            if (key.size() == 1 && std::isalpha(static_cast<unsigned char>(key[0])) != 0) {
                slot = std::tolower(static_cast<unsigned char>(key[0])) - 'a' + 1;
            } else {
                try {
                    slot = std::stoi(key);
                } catch (const std::exception&) {
                    throw PreconditionError(fmt::format("{}: cannot read the target of '{}'", flag, item));
                }
            }
            body = item.substr(eq + 1);
        }
        if (slot < 1 || slot > q) throw PreconditionError(fmt::format("{}: '{}' names x{} beyond q = {}", flag, item, slot, q));
        if (!out.emplace(slot, parse_word_in(body, q)).second) {
            throw PreconditionError(fmt::format("{}: x{} assigned twice", flag, slot));
        }
        next = slot + 1;
    }
    return out;
}

void add_mu(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("mu", "Milnor invariant mu(I; l) from longitude words");
    auto q = std::make_shared<int>(3);
    auto k = std::make_shared<int>(2);
    auto component = std::make_shared<int>(1);
    auto index = std::make_shared<std::string>();
    auto longitudes = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--q", *q, "number of components")->capture_default_str();
    cmd->add_option("--k", *k, "level of the assumption A_k")->required();
    cmd->add_option("--component", *component, "component l")->required();
    cmd->add_option("--index", *index, "index sequence I")->required();
    cmd->add_option("--longitude", *longitudes, "longitude word, optionally 'l=word'")->required();
    cmd->callback([&g, q, k, component, index, longitudes] {
        require_rank(*q);
        require_level(*k);
        const Sequence i = parse_index(*index, *q);
        require_degree("index length + 2", static_cast<int>(i.size()) + 2);
        const nilcoh::LongitudeSystem ls{*q, parse_assignments(*longitudes, *q, "--longitude")};
        const auto assumption = nilcoh::check_assumption(ls, *k);
        const Integer mu = nilcoh::milnor_mu(ls, i, *component);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        doc["component"] = *component;
        doc["index"] = seq_text(i);
        doc["value"] = mu.str();
        Json report = Json::object();
        std::string text = mu.str() + "\n";
        for (const auto& [c, holds] : assumption) {
            report[std::to_string(c)] = holds;
            text += fmt::format("A_{} component {}: {}\n", *k, c, holds ? "holds" : "fails");
        }
        doc["assumption"] = std::move(report);
        if (i.front() != *component) {
            const auto [first, second] = nilcoh::mu_pairing_crosscheck(ls, i, *component);
            doc["crosscheck"] = {{"mu", first.str()}, {"relator_coefficient", second.str()}, {"agree", first == second}};
            text += fmt::format("crosscheck: {} vs {}\n", first.str(), second.str());
        }
        emit(g, doc, text);
    });
}

void add_johnson(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("johnson", "Johnson homomorphism of an endomorphism of F");
    auto q = std::make_shared<int>(2);
    auto k = std::make_shared<int>(2);
    auto images = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--q", *q, "number of generators")->capture_default_str();
    cmd->add_option("--k", *k, "degree k of tau_k")->required();
    cmd->add_option("--image", *images, "'x1=word'; unlisted generators are fixed");
    cmd->callback([&g, q, k, images] {
        require_rank(*q);
        if (*k < 1) throw PreconditionError("k >= 1 required");
        require_degree("2k", 2 * *k);
        const auto assigned = parse_assignments(*images, *q, "--image");
        std::vector<Word> list;
        for (int i = 1; i <= *q; ++i) {
            const auto it = assigned.find(i);
            list.push_back(it == assigned.end() ? Word::generator(i) : it->second);
        }
        const nilcoh::FreeEndomorphism f(list);
        const int depth = nilcoh::torelli_depth(f, 2 * *k);
        const auto tau = nilcoh::johnson_tau(f, *k);
        const bool morita = nilcoh::morita_vanishes(f, *k);
        Json doc = document();
        doc["q"] = *q;
        doc["k"] = *k;
        Json components = Json::object();
        std::string text;
        for (int i = 0; i < *q; ++i) {
            const auto& p = tau.components[static_cast<std::size_t>(i)];
            Json terms = Json::object();
            for (const auto& [monomial, coefficient] : p.terms()) terms[seq_text(monomial)] = coefficient.str();
            components[fmt::format("x{}", i + 1)] = std::move(terms);
            text += fmt::format("tau_{}(x{}) = {}\n", *k, i + 1, nilcoh::to_string(p));
        }
        doc["tau"] = std::move(components);
        doc["tau_zero"] = tau.is_zero();
        doc["depth"] = depth;
        doc["depth_capped"] = depth >= 2 * *k;
        doc["morita_vanishes"] = morita;
        text += fmt::format("depth: {}{}\nmorita vanishes: {}\n", depth >= 2 * *k ? ">= " : "", depth,
                            morita ? "yes" : "no");
        emit(g, doc, text);
    });
}

// --- forms ----------------------------------------------------------------------------

void add_forms(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("forms", "invariant differential forms on the Magnus image");
    cmd->require_subcommand(1);
    for (const bool massey : {false, true}) {
        auto* sub = cmd->add_subcommand(massey ? "massey" : "gamma", massey ? "Massey 2-form" : "gamma 1-form");
        auto index = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>("right");
        auto ascii = std::make_shared<bool>(false);
        sub->add_option("--index", *index, "index word, letters or digits")->required();
        sub->add_option("--side", *side, "multiplication side of the invariance")
            ->check(CLI::IsMember({"right", "left"}))
            ->capture_default_str();
        sub->add_flag("--ascii", *ascii, "write beta_ and ^ instead of Greek letters and wedges");
        sub->callback([&g, massey, index, side, ascii] {
            const Sequence i = nilcoh::parse_sequence(*index);
            require_degree("index length", static_cast<int>(i.size()));
            const nilcoh::Side s = *side == "left" ? nilcoh::Side::kLeft : nilcoh::Side::kRight;
            const auto form = massey ? nilcoh::massey_2form(i, s) : nilcoh::gamma_form(i, s);
            const std::string text = nilcoh::to_string(form, *ascii);
            Json doc = document();
            doc["form"] = massey ? "massey" : "gamma";
            doc["index"] = nilcoh::sequence_to_letters(i);
            doc["side"] = *side;
            doc["text"] = text;
            emit(g, doc, text + "\n");
        });
    }
}

// --- verify / replay ----------------------------------------------------------------

std::string inputs_text(const nilcoh::CheckInputs& inputs) { return fmt::format("{}", fmt::join(inputs, " | ")); }

void add_verify(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("verify", "randomised invariant checks");
    auto suite = std::make_shared<std::string>("all");
    auto config = std::make_shared<nilcoh::CheckConfig>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto samples = std::make_shared<std::size_t>(100);
    auto report = std::make_shared<std::string>();
    auto list = std::make_shared<bool>(false);
    cmd->add_option("suite", *suite, "module, 'all', 'transcription' or a check name")->capture_default_str();
    cmd->add_option("--q", config->q, "number of generators")->capture_default_str();
    cmd->add_option("--k,--max-len", config->k, "level (bounds index lengths)")->capture_default_str();
    cmd->add_option("--max-word-length", config->max_word_length, "length of random words")->capture_default_str();
    cmd->add_option("--seed", *seed, "random seed")->capture_default_str();
    cmd->add_option("--samples", *samples, "samples per check")->capture_default_str();
    cmd->add_option("--report", *report, "also write the JSON report to this file");
    cmd->add_flag("--list", *list, "list the registered checks and exit");
    cmd->callback([&g, suite, config, seed, samples, report, list] {
        if (*list) {
            Json doc = document();
            doc["checks"] = Json::array();
            std::string text;
            for (const auto& c : nilcoh::check_registry()) {
                doc["checks"].push_back({{"name", c.name}, {"module", c.module}, {"description", c.description}});
                text += fmt::format("{:<14} {:<34} {}\n", c.module, c.name, c.description);
            }
            emit(g, doc, text);
            return;
        }
        require_rank(config->q);
        require_level(config->k);
        require_degree("k+1", config->k + 1);
        const auto result = nilcoh::run_suite(*suite, *config, *seed, *samples);
        const Json doc = nilcoh::to_json(result);
        if (!report->empty()) {
            std::ofstream out(*report);
            if (!out) throw nilcoh::ResourceError("cannot write " + *report);
            out << doc.dump(2) << '\n';
        }
        std::string text;
        std::size_t failed = 0;
        for (const auto& r : result.results) {
            if (r.samples == 0) {
                text += fmt::format("SKIP {} (not applicable)\n", r.name);
            } else if (r.passed()) {
                text += fmt::format("PASS {} ({} samples)\n", r.name, r.samples);
            } else {
                ++failed;
                text += fmt::format("FAIL {} ({} of {} samples)\n     inputs: {}\n     lhs: {}\n     rhs: {}\n", r.name,
                                    r.failures, r.samples, inputs_text(r.counterexample->inputs), r.counterexample->lhs,
                                    r.counterexample->rhs);
            }
        }
        text += failed == 0 ? fmt::format("all {} checks passed\n", result.results.size())
                            : fmt::format("{} of {} checks failed\n", failed, result.results.size());
        emit(g, doc, text);
        if (!result.passed()) throw VerificationFailed{};
    });
}

void add_replay(CLI::App& app, Globals& g) {
    auto* cmd = app.add_subcommand("replay", "re-run the samples recorded in a verify report");
    auto path = std::make_shared<std::string>();
    cmd->add_option("report", *path, "JSON report written by verify")->required()->check(CLI::ExistingFile);
    cmd->callback([&g, path] {
        std::ifstream in(*path);
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw PreconditionError(fmt::format("malformed report {}: {}", *path, e.what()));
        }
        nilcoh::VerificationReport report;
        try {
            report = nilcoh::report_from_json(parsed);
        } catch (const nlohmann::json::exception& e) {
            throw PreconditionError(fmt::format("malformed report {}: {}", *path, e.what()));
        }
        const auto outcomes = nilcoh::replay(report);
        std::string text;
        bool reproduced = true;
        for (const auto& o : outcomes) {
            reproduced = reproduced && o.reproduced;
            text += fmt::format("{} {} [{}] {} {} {}\n", o.reproduced ? "ok      " : "MISMATCH", o.check,
                                inputs_text(o.recorded.inputs), o.recomputed.first, o.holds ? "==" : "!=",
                                o.recomputed.second);
        }
        text += reproduced ? fmt::format("{} recorded samples reproduced\n", outcomes.size())
                           : "recorded values differ from the recomputation\n";
        emit(g, nilcoh::to_json(outcomes), text);
        if (!reproduced) throw VerificationFailed{};
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilcoh: exact computations in free nilpotent quotients F/F_k"};
    app.set_help_all_flag("--help-all", "expand the help of every subcommand");
    app.set_config("--config", "", "read options from a TOML or INI file (same keys as the flags)");
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.footer("Words: a,b,c,... are x1,x2,x3,... and A,B,C their inverses; 'x1 x2^-1' is also accepted.\n"
               "NILCOH_MAX_DEGREE caps k and index lengths (default 8).\n"
               "Exit status: 0 success, 1 verification failure, 2 usage or precondition error.");

    add_witt(app, g);
    add_lyndon(app, g);
    add_magnus(app, g);
    add_upsilon(app, g);
    add_massey2(app, g);
    add_massey3(app, g);
    add_census3(app, g);
    add_pair(app, g);
    add_quotient(app, g);
    add_mu(app, g);
    add_johnson(app, g);
    add_forms(app, g);
    add_verify(app, g);
    add_replay(app, g);

    auto fail = [&g](const std::string& kind, const std::string& message) {
        if (g.json) std::cout << Json{{"schema", 1}, {"error", kind}, {"message", message}}.dump(2) << '\n';
        std::cerr << "nilcoh: " << kind << ": " << message << '\n';
        return kExitUsage;
    };
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const VerificationFailed&) {
        return kExitFailure;
    } catch (const nilcoh::PreconditionError& e) {
        return fail("precondition violated", e.what());
    } catch (const nilcoh::ResourceError& e) {
        return fail("resource limit", e.what());
    }
    return 0;
}
