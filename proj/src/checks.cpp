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
#include <map>

#include <fmt/format.h>

#include "nilcoh/cocycle3.hpp"
#include "nilcoh/derham.hpp"
#include "nilcoh/extension.hpp"
#include "nilcoh/topology.hpp"
#include "nilcoh/upsilon.hpp"
#include "nilcoh/verify.hpp"

namespace nilcoh {

namespace {

// --- serialisation helpers --------------------------------------------------

std::string str(const Word& w) { return to_string(w); }
std::string str(const Sequence& s) { return sequence_to_string(s); }
std::string str(int v) { return std::to_string(v); }
std::string str(const Integer& v) { return v.str(); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(const IntegerVector& v) {
    std::vector<std::string> parts;
    for (const Integer& x : v) parts.push_back(x.str());
    return fmt::format("[{}]", fmt::join(parts, ","));
}

Word word(const std::string& s) { return parse_word(s); }
Sequence seq(const std::string& s) { return parse_sequence(s); }
int num(const std::string& s) { return std::stoi(s); }

const Sequence& pick(Rng& rng, const std::vector<Sequence>& list) {
    return list[static_cast<std::size_t>(rng.below(list.size()))];
}

Sequence random_sequence(Rng& rng, int q, int length) {
    Sequence out;
    for (int i = 0; i < length; ++i) out.push_back(rng.between(1, q));
    return out;
}

Sequence random_standard(Rng& rng, int q, int length) { return pick(rng, standard_sequences(q, length)); }

std::string random_word_text(Rng& rng, const CheckConfig& c) { return str(random_word(rng, c.q, c.max_word_length)); }

// w times a random element of F_k, on a random side.
std::string perturbed(Rng& rng, const std::string& w, int q, int k) {
    const Word f = random_Fk_element(rng, q, k);
    return str(normalize(rng.below(2) == 0 ? word(w) * f : f * word(w)));
}

std::vector<Element> elements(const CheckInputs& in, std::size_t first, std::size_t count, int level) {
    std::vector<Element> out;
    for (std::size_t i = first; i < first + count; ++i) out.emplace_back(word(in[i]), level);
    return out;
}

CheckSides sides(const Integer& a, const Integer& b) { return {a.str(), b.str()}; }

bool always(const CheckConfig&) { return true; }
// Standard sequences of length >= 2 exist only for q >= 2.
bool has_standard(const CheckConfig& c) { return c.q >= 2; }
bool k_at_least_3(const CheckConfig& c) { return c.q >= 2 && c.k >= 3; }

// The quotient group used by the quotient checks: the first standard sequence
// of length k as the only relator.
CentralQuotientGroup default_quotient(const CheckConfig& c) {
    return CentralQuotientGroup(c.q, c.k, {standard_sequences(c.q, c.k).front()});
}

}  // namespace

const std::vector<CheckDefinition>& check_registry() {
    static const std::vector<CheckDefinition> registry = [] {
        std::vector<CheckDefinition> r;

        // --- words --------------------------------------------------------------
        r.push_back({"witt_vs_enumeration", "words", "N_k equals the number of standard sequences", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(rng.between(1, std::max(c.q, 4))), str(rng.between(1, 8))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const int q = num(in[0]);
                         const int k = num(in[1]);
                         return sides(witt_number(q, k).value, Integer(standard_sequences(q, k).size()));
                     }});
        r.push_back({"standard_commutator_delta", "words", "c_J(W_I) is the Kronecker delta on standard J",
                     always,
                     [](Rng& rng, const CheckConfig& c) {
                         const int k = c.q == 1 ? 1 : rng.between(1, std::min(c.k, 5));
                         return CheckInputs{str(random_standard(rng, c.q, k)), str(random_standard(rng, c.q, k))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Sequence i = seq(in[0]);
                         const Sequence j = seq(in[1]);
                         const int k = static_cast<int>(i.size());
                         return sides(magnus_coefficient(j, standard_commutator(i), k + 1), Integer(i == j ? 1 : 0));
                     }});
        r.push_back({"normalize_homomorphism", "words", "free reduction is compatible with concatenation", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Word u = word(in[0]);
                         const Word v = word(in[1]);
                         return CheckSides{str(normalize(u * v)), str(normalize(normalize(u) * normalize(v)))};
                     }});

        // --- magnus -------------------------------------------------------------
        r.push_back({"magnus_multiplicative", "magnus", "M(uv) = M(u) M(v)", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word u = word(in[0]);
                         const Word v = word(in[1]);
                         return CheckSides{to_string(magnus_expand(u * v, c.k + 1)),
                                           to_string(magnus_expand(u, c.k + 1) * magnus_expand(v, c.k + 1))};
                     }});
        r.push_back({"magnus_inverse", "magnus", "M(w) M(w^-1) = 1", always,
                     [](Rng& rng, const CheckConfig& c) { return CheckInputs{random_word_text(rng, c)}; },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word w = word(in[0]);
                         return CheckSides{to_string(magnus_expand(w, c.k + 1) * magnus_expand(w.inverse(), c.k + 1)),
                                           "1"};
                     }});
        r.push_back({"magnus_shuffle_image", "magnus", "M(w) satisfies the shuffle relations", always,
                     [](Rng& rng, const CheckConfig& c) { return CheckInputs{random_word_text(rng, c)}; },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         return CheckSides{str(satisfies_shuffle_relations(magnus_expand(word(in[0]), c.k + 1))),
                                           "true"};
                     }});
        r.push_back({"magnus_splitting", "magnus", "c_I(uv) = sum over splittings I = I'I'' of c_I'(u) c_I''(v)",
                     always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, rng.between(1, c.k))),
                                            random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Sequence i = seq(in[0]);
                         const Word u = word(in[1]);
                         const Word v = word(in[2]);
                         const auto mu = magnus_expand(u, c.k + 1);
                         const auto mv = magnus_expand(v, c.k + 1);
                         Integer sum = 0;
                         for (std::size_t split = 0; split <= i.size(); ++split) {
                             sum += mu.coefficient(subsequence(i, 0, split)) *
                                    mv.coefficient(subsequence(i, split, i.size()));
                         }
                         return sides(magnus_coefficient(i, u * v, c.k + 1), sum);
                     }});
        r.push_back({"upsilon_matches_magnus", "magnus", "Upsilon_k and M decide equality in F/F_k alike",
                     always,
                     [](Rng& rng, const CheckConfig& c) {
                         const std::string u = str(random_word(rng, c.q, std::min(c.max_word_length, 10)));
                         // Half of the pairs differ by an element of F_k.
                         const std::string v = rng.below(2) == 0
                                                   ? perturbed(rng, u, c.q, c.k)
                                                   : str(random_word(rng, c.q, std::min(c.max_word_length, 10)));
                         return CheckInputs{u, v};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word u = word(in[0]);
                         const Word v = word(in[1]);
                         return CheckSides{str(equal_mod_Fk(u, v, c.k)), str(upsilon(u, c.k) == upsilon(v, c.k))};
                     }});
        r.push_back({"upsilon_kills_Fk", "magnus", "Upsilon_k of a weight-k commutator is the identity", always,
                     [](Rng& rng, const CheckConfig& c) { return CheckInputs{str(random_commutator(rng, c.q, c.k))}; },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         return CheckSides{str(upsilon(word(in[0]), c.k).is_identity()), "true"};
                     }});

        // --- cochain ------------------------------------------------------------
        r.push_back({"dd_zero_degree1", "cochain", "d d c_I = 0", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, rng.between(1, c.k - 1))),
                                            random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain f = Cochain::coefficient(1, 0, seq(in[0]));
                         return sides(coboundary(coboundary(f)).evaluate(elements(in, 1, 3, c.k)), 0);
                     }});
        r.push_back({"dd_zero_degree2", "cochain", "d d (c_U(x) c_V(y)) = 0", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, rng.between(1, c.k - 1))),
                                            str(random_sequence(rng, c.q, rng.between(1, c.k - 1))),
                                            random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain f = coefficient_product(2, {{0, seq(in[0])}, {1, seq(in[1])}});
                         return sides(coboundary(coboundary(f)).evaluate(elements(in, 2, 4, c.k)), 0);
                     }});
        r.push_back({"defining_system", "cochain", "condition (iii) of the defining system a_{s,t} = c_{i_s..i_t}",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         const Sequence i = random_standard(rng, c.q, c.k);
                         int s = 0;
                         int t = 0;
                         do {
                             s = rng.between(1, c.k);
                             t = rng.between(1, c.k);
                         } while (s >= t || (s == 1 && t == c.k));
                         return CheckInputs{str(i), str(s), str(t), random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Sequence i = seq(in[0]);
                         const auto grid = defining_system(i);
                         const auto [lhs, rhs] = defining_system_condition(grid, i, num(in[1]), num(in[2]));
                         const auto args = elements(in, 3, 2, c.k);
                         return sides(lhs.evaluate(args), rhs.evaluate(args));
                     }});
        r.push_back({"massey_sum_matches_massey2", "cochain",
                     "the Massey sum of the defining system equals the explicit 2-cocycle", has_standard,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_standard(rng, c.q, c.k)), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Sequence i = seq(in[0]);
                         const auto args = elements(in, 1, 2, c.k);
                         return sides(massey_from_defining_system(defining_system(i), c.k).evaluate(args),
                                      massey2(i).evaluate(args));
                     }});
        r.push_back({"massey2_cocycle", "cochain", "d massey2 = 0", has_standard,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_standard(rng, c.q, c.k)), random_word_text(rng, c),
                                            random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         return sides(coboundary(massey2(seq(in[0]))).evaluate(elements(in, 1, 3, c.k)), 0);
                     }});
        r.push_back({"massey2_well_defined", "cochain", "massey2 is unchanged by F_k perturbations", has_standard,
                     [](Rng& rng, const CheckConfig& c) {
                         const std::string x = random_word_text(rng, c);
                         const std::string y = random_word_text(rng, c);
                         return CheckInputs{str(random_standard(rng, c.q, c.k)), x, y, perturbed(rng, x, c.q, c.k),
                                            perturbed(rng, y, c.q, c.k)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain m = massey2(seq(in[0]));
                         // Level k+1 keeps the perturbation visible to the length-k coefficients.
                         return sides(m.evaluate(elements(in, 1, 2, c.k + 1)), m.evaluate(elements(in, 3, 2, c.k + 1)));
                     }});
        r.push_back({"extension_fiber", "cochain", "the extension fiber of w is (c_I(w))_I at level k+1", always,
                     [](Rng& rng, const CheckConfig& c) { return CheckInputs{random_word_text(rng, c)}; },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word w = word(in[0]);
                         const CentralExtension extension(c.q, c.k);
                         IntegerVector expected;
                         const auto p = magnus_expand(w, c.k + 1);
                         for (const Sequence& i : extension.basis()) expected.push_back(p.coefficient(i));
                         return CheckSides{str(extension.evaluate(w).fiber), str(expected)};
                     }});
        r.push_back({"extension_equivalence", "cochain",
                     "extension evaluation and M at level k+1 induce the same equivalence", always,
                     [](Rng& rng, const CheckConfig& c) {
                         const std::string u = random_word_text(rng, c);
                         const int depth = rng.below(2) == 0 ? c.k : c.k + 1;
                         return CheckInputs{u, perturbed(rng, u, c.q, depth)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const CentralExtension extension(c.q, c.k);
                         const Word u = word(in[0]);
                         const Word v = word(in[1]);
                         return CheckSides{str(extension.evaluate(u) == extension.evaluate(v)),
                                           str(equal_mod_Fk(u, v, c.k + 1))};
                     }});
        r.push_back({"extension_associative", "cochain", "the extension group law is associative", always,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{random_word_text(rng, c), random_word_text(rng, c), random_word_text(rng, c)};
                         for (int i = 0; i < 3; ++i) in.push_back(str(Integer(rng.between(-3, 3))));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const CentralExtension extension(c.q, c.k);
                         std::vector<ExtensionElement> e;
                         for (int i = 0; i < 3; ++i) {
                             ExtensionElement x = extension.evaluate(word(in[static_cast<std::size_t>(i)]));
                             if (!x.fiber.empty()) x.fiber.front() += num(in[static_cast<std::size_t>(3 + i)]);
                             e.push_back(std::move(x));
                         }
                         const auto left = extension.multiply(extension.multiply(e[0], e[1]), e[2]);
                         const auto right = extension.multiply(e[0], extension.multiply(e[1], e[2]));
                         return CheckSides{str(left.fiber) + str(left.base.normal_form() == right.base.normal_form()),
                                           str(right.fiber) + "true"};
                     }});
        r.push_back({"pairing_dual_path", "cochain", "pairing via M equals the extension fiber on F_k", has_standard,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_Fk_element(rng, c.q, c.k)), str(random_standard(rng, c.q, c.k))};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word w = word(in[0]);
                         const Sequence i = seq(in[1]);
                         const auto basis = standard_sequences(c.q, c.k);
                         const auto pos = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), i) - basis.begin());
                         const auto evaluation = evaluate_word_in_extension(w, c.q, c.k);
                         return CheckSides{pairing(i, w).str(),
                                           evaluation.in_Fk ? evaluation.element.fiber.at(pos).str() : "not in F_k"};
                     }});
        r.push_back({"s_map_additive", "cochain", "s_map(uv) = s_map(u) + s_map(v) on F_k", always,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_Fk_element(rng, c.q, c.k)), str(random_Fk_element(rng, c.q, c.k))};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Word u = word(in[0]);
                         const Word v = word(in[1]);
                         IntegerVector sum = s_map(u, c.q, c.k);
                         const IntegerVector sv = s_map(v, c.q, c.k);
                         for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += sv[i];
                         return CheckSides{str(s_map(u * v, c.q, c.k)), str(sum)};
                     }});

        // --- cocycle3 -----------------------------------------------------------
        r.push_back({"gamma3_cocycle", "cocycle3", "d Gamma_{sI} = 0 for |I| = k", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k))};
                         for (int i = 0; i < 4; ++i) in.push_back(random_word_text(rng, c));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain g = gamma3(num(in[0]), seq(in[1]), c.k);
                         return sides(coboundary(g).evaluate(elements(in, 2, 4, c.k)), 0);
                     }});
        r.push_back({"gamma3_well_defined", "cocycle3", "Gamma_{sI} is unchanged by F_k perturbations",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k))};
                         for (int i = 0; i < 3; ++i) in.push_back(random_word_text(rng, c));
                         for (int i = 0; i < 3; ++i) in.push_back(perturbed(rng, in[static_cast<std::size_t>(2 + i)], c.q, c.k));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain g = gamma3(num(in[0]), seq(in[1]), c.k);
                         return sides(g.evaluate(elements(in, 2, 3, c.k + 1)), g.evaluate(elements(in, 5, 3, c.k + 1)));
                     }});
        r.push_back({"corrected_cocycle", "cocycle3", "d (Gamma_{sI} - d b) = 0 for |I| = k+1", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k + 1))};
                         for (int i = 0; i < 4; ++i) in.push_back(random_word_text(rng, c));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain g = corrected_3cocycle(num(in[0]), seq(in[1]), c.k);
                         return sides(coboundary(g).evaluate(elements(in, 2, 4, c.k + 1)), 0);
                     }});
        r.push_back({"corrected_well_defined", "cocycle3", "Gamma_{sI} - d b is unchanged by F_k perturbations",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k + 1))};
                         for (int i = 0; i < 3; ++i) in.push_back(random_word_text(rng, c));
                         for (int i = 0; i < 3; ++i) in.push_back(perturbed(rng, in[static_cast<std::size_t>(2 + i)], c.q, c.k));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const Cochain g = corrected_3cocycle(num(in[0]), seq(in[1]), c.k);
                         return sides(g.evaluate(elements(in, 2, 3, c.k + 1)), g.evaluate(elements(in, 5, 3, c.k + 1)));
                     }});
        r.push_back({"corrected_closed_form", "cocycle3", "Gamma_{sI} - d b equals its expanded closed form",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k + 1))};
                         for (int i = 0; i < 3; ++i) in.push_back(random_word_text(rng, c));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const int s = num(in[0]);
                         const Sequence i = seq(in[1]);
                         const auto args = elements(in, 2, 3, c.k + 1);
                         return sides(corrected_3cocycle(s, i, c.k).evaluate(args),
                                      corrected_3cocycle_closed_form(s, i, c.k).evaluate(args));
                     }});
        r.push_back({"census_criterion", "cocycle3", "I.s is standard iff s > i_1, for standard I", always,
                     [](Rng& rng, const CheckConfig& c) {
                         const int l = c.q == 1 ? 1 : rng.between(1, 6);
                         return CheckInputs{str(random_standard(rng, c.q, l)), str(rng.between(1, c.q))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         Sequence i = seq(in[0]);
                         const int s = num(in[1]);
                         const bool expected = s > i.front();
                         i.push_back(s);
                         return CheckSides{str(is_standard(i)), str(expected)};
                     }});
        r.push_back({"phi_representative_independence", "cocycle3",
                     "phi is unchanged by relator and F_{k+1} perturbations", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         const auto g = default_quotient(c);
                         CheckInputs in{random_word_text(rng, c), random_word_text(rng, c)};
                         for (int i = 0; i < 2; ++i) {
                             Word w = word(in[static_cast<std::size_t>(i)]);
                             w *= power(g.relator_words().front(), rng.between(-2, 2));
                             in.push_back(perturbed(rng, str(normalize(w)), c.q, c.k + 1));
                         }
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const Cochain phi = phi_cocycle(g, 0);
                         const auto base = elements(in, 0, 2, c.k + 1);
                         const auto moved = elements(in, 2, 2, c.k + 1);
                         const bool same = g.equal(base[0], moved[0]) && g.equal(base[1], moved[1]);
                         return CheckSides{phi.evaluate(moved).str() + str(same), phi.evaluate(base).str() + "true"};
                     }});
        r.push_back({"phi_cocycle", "cocycle3", "d phi = 0 on the quotient", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{random_word_text(rng, c), random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         return sides(coboundary(phi_cocycle(g, 0)).evaluate(elements(in, 0, 3, c.k + 1)), 0);
                     }});
        r.push_back({"triple_cobounding_left", "cocycle3", "alpha_r cup phi = -d A", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(rng.between(1, c.q)), random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const int r = num(in[0]);
                         const auto args = elements(in, 1, 3, c.k + 1);
                         return sides(cup(Cochain::alpha(r), phi_cocycle(g, 0)).evaluate(args),
                                      (-coboundary(triple_massey_left(g, r, 0))).evaluate(args));
                     }});
        r.push_back({"triple_cobounding_right", "cocycle3", "phi cup alpha_s = d B", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(rng.between(1, c.q)), random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const int s = num(in[0]);
                         const auto args = elements(in, 1, 3, c.k + 1);
                         return sides(cup(phi_cocycle(g, 0), Cochain::alpha(s)).evaluate(args),
                                      coboundary(triple_massey_right(g, 0, s)).evaluate(args));
                     }});
        r.push_back({"triple_cocycle", "cocycle3", "the triple Massey cochain is a cocycle", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(rng.between(1, c.q))};
                         for (int i = 0; i < 4; ++i) in.push_back(random_word_text(rng, c));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const Cochain t = triple_massey(g, num(in[0]), 0, num(in[1]));
                         return sides(coboundary(t).evaluate(elements(in, 2, 4, c.k + 1)), 0);
                     }});

        // --- topology -----------------------------------------------------------
        r.push_back({"mu_crosscheck", "topology", "mu(I; l) equals the X_{I l} coefficient of M([w_l, x_l])",
                     [](const CheckConfig& c) { return c.q >= 2; },
                     [](Rng& rng, const CheckConfig& c) {
                         const int k = rng.between(2, std::min(c.k, 4));
                         const int l = rng.between(1, c.q);
                         Sequence i = random_sequence(rng, c.q, k);
                         while (i.front() == l) i.front() = rng.between(1, c.q);
                         return CheckInputs{str(l), str(random_Fk_element(rng, c.q, k)), str(i)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const int l = num(in[0]);
                         const LongitudeSystem ls{c.q, {{l, word(in[1])}}};
                         const auto [mu, second] = mu_pairing_crosscheck(ls, seq(in[2]), l);
                         return sides(mu, second);
                     }});
        r.push_back({"mu_correction_term", "topology",
                     "X_{I l} coefficient of M([w, x_l]) is c_I(w) - [i_1 = l] c_{i_2..i_k l}(w)", always,
                     [](Rng& rng, const CheckConfig& c) {
                         const int k = rng.between(1, std::min(c.k, 4));
                         return CheckInputs{str(rng.between(1, c.q)), str(random_Fk_element(rng, c.q, k)),
                                            str(random_sequence(rng, c.q, k))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const int l = num(in[0]);
                         const Word w = word(in[1]);
                         const Sequence i = seq(in[2]);
                         const int k = static_cast<int>(i.size());
                         Sequence il = i;
                         il.push_back(l);
                         Integer expected = magnus_coefficient(i, w, k + 2);
                         if (i.front() == l) {
                             Sequence tail(i.begin() + 1, i.end());
                             tail.push_back(l);
                             expected -= magnus_coefficient(tail, w, k + 2);
                         }
                         return sides(magnus_coefficient(il, commutator(w, Word::generator(l)), k + 2), expected);
                     }});
        r.push_back({"johnson_depth_equivalence", "topology", "tau_k(f) = 0 iff f is in T(k+1), for f in T(k)",
                     always,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in;
                         for (int i = 1; i <= c.q; ++i) {
                             Word image = Word::generator(i);
                             if (rng.below(3) != 0) image *= random_Fk_element(rng, c.q, rng.between(c.k, c.k + 1));
                             in.push_back(str(normalize(image)));
                         }
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         std::vector<Word> images;
                         for (const std::string& s : in) images.push_back(word(s));
                         const FreeEndomorphism f(images);
                         return CheckSides{str(johnson_tau(f, c.k).is_zero()), str(torelli_depth(f, c.k + 1) >= c.k + 1)};
                     }});
        r.push_back({"johnson_additive", "topology", "tau_k(f o g) = tau_k(f) + tau_k(g) on T(k)", always,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in;
                         for (int i = 1; i <= 2 * c.q; ++i) {
                             const int generator = (i - 1) % c.q + 1;
                             in.push_back(str(normalize(Word::generator(generator) * random_Fk_element(rng, c.q, c.k))));
                         }
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         std::vector<Word> fi;
                         std::vector<Word> gi;
                         for (int i = 0; i < c.q; ++i) {
                             fi.push_back(word(in[static_cast<std::size_t>(i)]));
                             gi.push_back(word(in[static_cast<std::size_t>(c.q + i)]));
                         }
                         const FreeEndomorphism f(fi);
                         const FreeEndomorphism g(gi);
                         auto text = [](const JohnsonValue& v) {
                             std::vector<std::string> parts;
                             for (const auto& p : v.components) parts.push_back(to_string(p));
                             return fmt::format("{}", fmt::join(parts, "; "));
                         };
                         return CheckSides{text(johnson_tau(compose(f, g), c.k)),
                                           text(johnson_tau(f, c.k) + johnson_tau(g, c.k))};
                     }});

        // --- derham -------------------------------------------------------------
        auto form_length = [](Rng& rng, const CheckConfig& c) { return rng.between(1, std::clamp(c.k, 2, 4)); };
        r.push_back({"gamma_invariance", "derham", "gamma_J is invariant under pullback by every generator", always,
                     [form_length](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, form_length(rng, c))), str(rng.between(1, c.q))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const DifferentialForm g = gamma_form(seq(in[0]));
                         return CheckSides{to_string(pullback(g, num(in[1]))), to_string(g)};
                     }});
        r.push_back({"structure_equation", "derham", "d gamma_J = sum gamma_{J<=r} wedge gamma_{J>r}", always,
                     [form_length](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, std::max(2, form_length(rng, c))))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Sequence j = seq(in[0]);
                         DifferentialForm rhs;
                         for (std::size_t r = 1; r < j.size(); ++r) {
                             rhs += wedge(gamma_form(std::span<const int>(j).first(r)),
                                          gamma_form(std::span<const int>(j).subspan(r)));
                         }
                         return CheckSides{to_string(exterior_d(gamma_form(j))), to_string(rhs)};
                     }});
        r.push_back({"massey_form_closed_invariant", "derham", "Massey 2-forms are closed and invariant", always,
                     [form_length](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, std::max(2, form_length(rng, c)))),
                                            str(rng.between(1, c.q))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const DifferentialForm m = massey_2form(seq(in[0]));
                         return CheckSides{to_string(exterior_d(m)) + " | " + to_string(pullback(m, num(in[1]))),
                                           "0 | " + to_string(m)};
                     }});
        r.push_back({"gamma_bridge", "derham", "gamma_J(M(h); M(gh) - M(h)) = c_J(g)", always,
                     [form_length](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, form_length(rng, c))), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Sequence j = seq(in[0]);
                         const int bound = static_cast<int>(j.size()) + 1;
                         const Word g = word(in[1]);
                         const Word h = word(in[2]);
                         const auto base = magnus_expand(h, bound);
                         return sides(evaluate_1form(gamma_form(j), base, magnus_expand(g * h, bound) - base),
                                      magnus_coefficient(j, g, bound));
                     }});
        r.push_back({"massey_form_bridge", "derham",
                     "the Massey 2-form on M(xh) - M(h), M(yh) - M(h) is massey2(x,y) - massey2(y,x)", always,
                     [form_length](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(random_sequence(rng, c.q, std::max(2, form_length(rng, c)))),
                                            random_word_text(rng, c), random_word_text(rng, c), random_word_text(rng, c)};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Sequence i = seq(in[0]);
                         const int level = static_cast<int>(i.size());
                         const Word x = word(in[1]);
                         const Word y = word(in[2]);
                         const Word h = word(in[3]);
                         const auto base = magnus_expand(h, level);
                         const Integer lhs = evaluate_2form(massey_2form(i), base, magnus_expand(x * h, level) - base,
                                                            magnus_expand(y * h, level) - base);
                         const Cochain m = massey2(i);
                         const Element ex(x, level);
                         const Element ey(y, level);
                         return sides(lhs, m({ex, ey}) - m({ey, ex}));
                     }});

        // --- transcription: formulas as written, expected to disagree ------
        r.push_back({"literal_b_well_defined", "transcription",
                     "Gamma_{sI} - d b with the all-plus correction is unchanged by F_k perturbations", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k + 1))};
                         for (int i = 0; i < 3; ++i) in.push_back(random_word_text(rng, c));
                         for (int i = 0; i < 3; ++i) in.push_back(perturbed(rng, in[static_cast<std::size_t>(2 + i)], c.q, c.k));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const int s = num(in[0]);
                         const Sequence i = seq(in[1]);
                         const Cochain g = gamma_cochain(s, i) - coboundary(b_correction_literal(s, i, c.k));
                         return sides(g.evaluate(elements(in, 2, 3, c.k + 1)), g.evaluate(elements(in, 5, 3, c.k + 1)));
                     }});
        r.push_back({"literal_corrected_display", "transcription",
                     "the expanded two-line formula equals Gamma_{sI} - d b", k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         CheckInputs in{str(rng.between(1, c.q)), str(random_standard(rng, c.q, c.k + 1))};
                         for (int i = 0; i < 3; ++i) in.push_back(random_word_text(rng, c));
                         return in;
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const int s = num(in[0]);
                         const Sequence i = seq(in[1]);
                         const auto args = elements(in, 2, 3, c.k + 1);
                         return sides(corrected_3cocycle_display(s, i, c.k).evaluate(args),
                                      corrected_3cocycle(s, i, c.k).evaluate(args));
                     }});
        r.push_back({"literal_census_count", "transcription",
                     "the number of (I, s) with I.s not standard equals q N_l - N_{l+1}", has_standard,
                     [](Rng& rng, const CheckConfig& c) {
                         const int k = rng.between(2, std::max(2, c.k));
                         return CheckInputs{str(rng.between(1, c.q)), str(k), str(rng.between(k, 2 * k - 2))};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Census census = census_basis3(num(in[0]), num(in[1]));
                         const int l = num(in[2]);
                         for (const CensusSlice& slice : census.slices) {
                             if (slice.length == l) return sides(Integer(slice.listed), slice.rank);
                         }
                         throw PreconditionError("slice out of range");
                     }});
        r.push_back({"literal_triple_left", "transcription", "alpha_r cup phi = d A with the literal sign",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(rng.between(1, c.q)), random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const int r = num(in[0]);
                         const auto args = elements(in, 1, 3, c.k + 1);
                         return sides(cup(Cochain::alpha(r), phi_cocycle(g, 0)).evaluate(args),
                                      coboundary(triple_massey_left_literal(g, r, 0)).evaluate(args));
                     }});
        r.push_back({"literal_triple_right", "transcription", "phi cup alpha_s = d B with the literal range 1 < l <= k",
                     k_at_least_3,
                     [](Rng& rng, const CheckConfig& c) {
                         return CheckInputs{str(rng.between(1, c.q)), random_word_text(rng, c), random_word_text(rng, c),
                                            random_word_text(rng, c)};
                     },
                     [](const CheckConfig& c, const CheckInputs& in) {
                         const auto g = default_quotient(c);
                         const int s = num(in[0]);
                         const auto args = elements(in, 1, 3, c.k + 1);
                         return sides(cup(phi_cocycle(g, 0), Cochain::alpha(s)).evaluate(args),
                                      coboundary(triple_massey_right_literal(g, 0, s)).evaluate(args));
                     }});
        r.push_back({"literal_reference_forms", "transcription",
                     "reference gamma-forms and Massey 2-forms match after normalisation", always,
                     [](Rng& rng, const CheckConfig&) {
                         const auto& forms = reference_forms();
                         return CheckInputs{forms[static_cast<std::size_t>(rng.below(forms.size()))].name,
                                            rng.below(2) == 0 ? "right" : "left"};
                     },
                     [](const CheckConfig&, const CheckInputs& in) {
                         const Side side = in[1] == "left" ? Side::kLeft : Side::kRight;
                         for (const ReferenceForm& f : reference_forms()) {
                             if (f.name != in[0]) continue;
                             const DifferentialForm computed =
                                 f.massey ? massey_2form(f.index, side) : gamma_form(f.index, side);
                             return CheckSides{to_string(parse_form(f.text)), to_string(computed)};
                         }
                         throw PreconditionError("unknown reference form " + in[0]);
                     }});
        return r;
    }();
    return registry;
}

const CheckDefinition& find_check(const std::string& name) {
    for (const CheckDefinition& c : check_registry()) {
        if (c.name == name) return c;
    }
    throw PreconditionError("unknown check: " + name);
}

std::vector<std::string> check_modules() {
    std::vector<std::string> out;
    for (const CheckDefinition& c : check_registry()) {
        if (std::find(out.begin(), out.end(), c.module) == out.end()) out.push_back(c.module);
    }
    return out;
}

}  // namespace nilcoh
