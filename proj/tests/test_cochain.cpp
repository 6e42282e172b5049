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

#include "nilcoh/cochain.hpp"
#include "nilcoh/sampling.hpp"

using namespace nilcoh;

namespace {

Element el(const char* w, int level) { return Element(parse_word(w), level); }

std::vector<Element> random_elements(Rng& rng, int q, int count, int level) {
    std::vector<Element> out;
    for (int i = 0; i < count; ++i) out.emplace_back(random_word(rng, q, 8), level);
    return out;
}

}  // namespace

TEST_CASE("nilpotent elements") {
    const Element x = el("aab", 3);
    CHECK(x.c(Sequence{1}) == 2);
    CHECK(x.c(Sequence{1, 1}) == 1);
    CHECK(x.c(Sequence{1, 2}) == 2);
    CHECK(x.c(Sequence{}) == 1);
    CHECK_THROWS_AS(x.c(Sequence{1, 1, 2}), PreconditionError);
    CHECK(x * x.inverse() == Element::identity(3));
    CHECK(el("ab", 2) == el("ba", 2));
    CHECK_FALSE(el("ab", 3) == el("ba", 3));
}

TEST_CASE("coboundary and cup on hand-computed values") {
    const Cochain c12 = Cochain::coefficient(1, 0, {1, 2});
    // d f (x, y) = f(y) - f(xy) + f(x) = -c_1(x) c_2(y).
    CHECK(coboundary(c12)({el("a", 3), el("b", 3)}) == -1);
    CHECK(coboundary(c12)({el("b", 3), el("a", 3)}) == 0);
    CHECK(coboundary(c12)({el("aa", 3), el("bbb", 3)}) == -6);
    // Homomorphisms are cocycles.
    CHECK(coboundary(Cochain::alpha(1))({el("abA", 3), el("aab", 3)}) == 0);
    CHECK(cup(Cochain::alpha(1), Cochain::alpha(2))({el("a", 2), el("b", 2)}) == -1);
    CHECK(cup(Cochain::constant(0, 3), Cochain::alpha(2))({el("bb", 2)}) == 6);
    CHECK(coboundary(c12).degree() == 2);
    CHECK(cup(c12, coboundary(c12)).degree() == 3);
    CHECK(Cochain::zero(2).is_zero());
    CHECK(cup(Cochain::zero(1), c12).is_zero());
    CHECK_THROWS_AS((Cochain::alpha(1) + Cochain::zero(2)), PreconditionError);
    CHECK_THROWS_AS(c12({el("a", 3), el("b", 3)}), PreconditionError);
}

TEST_CASE("d d = 0") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Cochain f = coefficient_product(2, {{0, {1, 2}}, {1, {2}}, {0, {1}}});
        CHECK(coboundary(coboundary(f)).evaluate(random_elements(rng, 2, 4, 3)) == 0);
        const Cochain g = Cochain::coefficient(1, 0, {2, 1, 1});
        CHECK(coboundary(coboundary(g)).evaluate(random_elements(rng, 2, 3, 4)) == 0);
    }
}

TEST_CASE("massey2 is the multiplicative defect of c_I") {
    // c_I(xy) = c_I(x) + c_I(y) + sum over proper splittings, so massey2 is
    // c_I(xy) - c_I(x) - c_I(y) computed one level up.
    Rng rng(9);
    for (int k = 2; k <= 4; ++k) {
        for (const Sequence& i : standard_sequences(2, k)) {
            for (int trial = 0; trial < 30; ++trial) {
                const Word x = random_word(rng, 2, 10);
                const Word y = random_word(rng, 2, 10);
                const Integer defect =
                    magnus_coefficient(i, x * y, k + 1) - magnus_coefficient(i, x, k + 1) - magnus_coefficient(i, y, k + 1);
                CHECK(massey2(i)({Element(x, k), Element(y, k)}) == defect);
            }
        }
    }
    CHECK(massey2(Sequence{1, 2})({el("a", 2), el("b", 2)}) == 1);
    CHECK(massey2(Sequence{1, 2})({el("b", 2), el("a", 2)}) == 0);
}

TEST_CASE("defining systems") {
    Rng rng(17);
    for (int k = 2; k <= 4; ++k) {
        for (const Sequence& i : standard_sequences(2, k)) {
            for (const auto convention : {SignConvention::kPlus, SignConvention::kMinus}) {
                const auto grid = defining_system(i, convention);
                CHECK(grid.size() == static_cast<std::size_t>(k * (k + 1) / 2 - 1));
                const Integer sign = (convention == SignConvention::kMinus && k % 2 == 1) ? -1 : 1;
                for (int trial = 0; trial < 10; ++trial) {
                    const auto args = random_elements(rng, 2, 2, k);
                    for (const auto& [st, cochain] : grid) {
                        if (st.first == st.second) continue;
                        const auto [lhs, rhs] = defining_system_condition(grid, i, st.first, st.second, convention);
                        CHECK(lhs.evaluate(args) == rhs.evaluate(args));
                    }
                    const Integer m = massey2(i).evaluate(args);
                    CHECK(massey_from_defining_system(grid, k).evaluate(args) == sign * m);
                    CHECK(coboundary(massey2(i)).evaluate(random_elements(rng, 2, 3, k)) == 0);
                }
            }
        }
    }
}

TEST_CASE("massey2 descends to F/F_k") {
    Rng rng(23);
    for (int k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 40; ++trial) {
            const Sequence i = standard_sequences(2, k)[static_cast<std::size_t>(rng.below(witt_number(2, k).value.convert_to<int>()))];
            const Word x = random_word(rng, 2, 8);
            const Word y = random_word(rng, 2, 8);
            const Word dx = random_Fk_element(rng, 2, k);
            const Word dy = random_Fk_element(rng, 2, k);
            CHECK(massey2(i)({Element(x, k + 1), Element(y, k + 1)}) ==
                  massey2(i)({Element(x * dx, k + 1), Element(dy * y, k + 1)}));
        }
    }
}

TEST_CASE("description") {
    CHECK(Cochain::alpha(2).describe().find("c_2") != std::string::npos);
}
