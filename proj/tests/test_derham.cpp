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

#include "nilcoh/derham.hpp"
#include "nilcoh/sampling.hpp"

using namespace nilcoh;

namespace {

std::vector<Sequence> words_up_to(int q, int max_length) {
    std::vector<Sequence> out;
    std::vector<Sequence> layer{{}};
    for (int l = 1; l <= max_length; ++l) {
        std::vector<Sequence> next;
        for (const Sequence& s : layer) {
            for (int a = 1; a <= q; ++a) {
                Sequence t = s;
                t.push_back(a);
                next.push_back(t);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

DifferentialForm structure_rhs(const Sequence& j) {
    DifferentialForm rhs;
    for (std::size_t r = 1; r < j.size(); ++r) {
        rhs += wedge(gamma_form(std::span<const int>(j).first(r)), gamma_form(std::span<const int>(j).subspan(r)));
    }
    return rhs;
}

}  // namespace

TEST_CASE("forms in canonical text") {
    CHECK(to_string(gamma_form(Sequence{1})) == "dX_a");
    CHECK(to_string(gamma_form(Sequence{1, 2})) == "dX_ab - β_b dX_a");
    CHECK(to_string(gamma_form(Sequence{1, 2, 3})) == "dX_abc - β_c dX_ab - β_bc dX_a + β_b β_c dX_a");
    CHECK(to_string(gamma_form(Sequence{1, 2}), true) == "dX_ab - beta_b dX_a");
    CHECK(to_string(DifferentialForm()) == "0");
    CHECK(to_string(DifferentialForm::basis({})) == "0");
}

TEST_CASE("reference example, first part") {
    // gamma_ab and the 2-form <a,b,c> as written; they are invariant under
    // multiplication on the left.
    CHECK(gamma_form(Sequence{1, 2}, Side::kLeft) == parse_form("dX_{ab} - \\beta_a dX_b"));
    CHECK(massey_2form(Sequence{1, 2, 3}, Side::kLeft) ==
          parse_form("dX_{a} \\wedge d X_{bc} + dX_{ab} \\wedge d X_c - \\beta_a dX_b d X_c - \\beta_b d X_a dX_c"));
}

TEST_CASE("reference gamma_abc is not invariant") {
    const DifferentialForm literal = parse_form("dX_{abc} - \\beta_c dX_{ab} - \\beta_{b}\\beta_{c} dX_{a}+ \\beta_{bc} dX_{a}");
    CHECK(literal != gamma_form(Sequence{1, 2, 3}, Side::kRight));
    CHECK(literal != gamma_form(Sequence{1, 2, 3}, Side::kLeft));
    bool invariant = true;
    for (int h = 1; h <= 3; ++h) invariant = invariant && pullback(literal, h) == literal;
    CHECK_FALSE(invariant);
}

TEST_CASE("parser") {
    const DifferentialForm m = massey_2form(Sequence{1, 2, 2, 3});
    CHECK(parse_form(to_string(m)) == m);
    CHECK(parse_form(to_string(m, true)) == m);
    CHECK(parse_form("beta_{1,2} dX_3 ^ dX_1") == parse_form("-β_ab dX_a ∧ dX_c"));
    CHECK(parse_form("2 (dX_a + dX_b) /\\ dX_a") == parse_form("-2 dX_a * dX_b"));
    CHECK(parse_form("dX_a ∧ dX_a").is_zero());
    CHECK_THROWS_AS(parse_form("dX_a ∧"), PreconditionError);
    CHECK_THROWS_AS(parse_form("\\wedge d X"), PreconditionError);
}

TEST_CASE("exterior algebra") {
    const DifferentialForm a = gamma_form(Sequence{1, 2});
    const DifferentialForm b = gamma_form(Sequence{2, 3, 1});
    CHECK(wedge(a, b) == Integer(-1) * wedge(b, a));
    CHECK(wedge(a, a).is_zero());
    CHECK(a.grade() == 1);
    CHECK(wedge(a, b).grade() == 2);
    CHECK((a + wedge(a, b)).grade() == -1);
    for (const Sequence& j : words_up_to(2, 3)) CHECK(exterior_d(exterior_d(gamma_form(j))).is_zero());
    // Leibniz on 1-forms: d(a ^ b) = da ^ b - a ^ db.
    CHECK(exterior_d(wedge(a, b)) == wedge(exterior_d(a), b) - wedge(a, exterior_d(b)));
}

TEST_CASE("gamma-forms are invariant and satisfy the structure equation") {
    for (const Sequence& j : words_up_to(3, 4)) {
        const DifferentialForm g = gamma_form(j);
        for (int h = 1; h <= 3; ++h) CHECK(pullback(g, h) == g);
        CHECK(exterior_d(g) == structure_rhs(j));
        // The mirrored convention: left invariance, reversed structure equation.
        const DifferentialForm left = gamma_form(j, Side::kLeft);
        for (int h = 1; h <= 3; ++h) CHECK(pullback(left, h, Side::kLeft) == left);
    }
}

TEST_CASE("Massey 2-forms are closed and invariant") {
    for (const Sequence& i : words_up_to(3, 4)) {
        if (i.size() < 2) continue;
        const DifferentialForm m = massey_2form(i);
        CHECK(exterior_d(m).is_zero());
        for (int h = 1; h <= 3; ++h) CHECK(pullback(m, h) == m);
    }
}

TEST_CASE("forms evaluated on Magnus images") {
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const Sequence j = words_up_to(2, 4)[static_cast<std::size_t>(rng.below(30))];
        const int bound = static_cast<int>(j.size()) + 1;
        const Word g = random_word(rng, 2, 8);
        const Word h = random_word(rng, 2, 8);
        const auto base = magnus_expand(h, bound);
        CHECK(evaluate_1form(gamma_form(j), base, magnus_expand(g * h, bound) - base) == magnus_coefficient(j, g, bound));
    }
}

TEST_CASE("reference forms") {
    const auto& refs = reference_forms();
    CHECK(refs.size() == 5);
    for (const ReferenceForm& r : refs) CHECK_NOTHROW(parse_form(r.text));
}
