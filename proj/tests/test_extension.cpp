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

#include "nilcoh/extension.hpp"
#include "nilcoh/lattice.hpp"
#include "nilcoh/sampling.hpp"

using namespace nilcoh;

TEST_CASE("lattice membership and rank") {
    IntegerLattice l(3, {{2, 0, 0}, {0, 3, 0}, {2, 3, 0}});
    CHECK(l.rank() == 2);
    CHECK(l.contains({4, -6, 0}));
    CHECK_FALSE(l.contains({1, 0, 0}));
    CHECK_FALSE(l.contains({0, 0, 1}));
    l.add_generator({1, 1, 0});
    CHECK(l.contains({1, 0, 0}));
    CHECK(l.rank() == 2);
    CHECK(l.basis() == std::vector<IntegerVector>{{1, 0, 0}, {0, 1, 0}});
    // gcd(6, 10) = 2.
    const IntegerLattice m(1, {{6}, {10}});
    CHECK(m.basis() == std::vector<IntegerVector>{{2}});
    CHECK(IntegerLattice(2).contains({0, 0}));
    CHECK_THROWS_AS(IntegerLattice(2).contains({1}), PreconditionError);
}

TEST_CASE("group law on generators") {
    const CentralExtension e(2, 2);
    REQUIRE(e.basis() == std::vector<Sequence>{{1, 2}});
    const auto a = e.lift_generator(1);
    const auto b = e.lift_generator(2);
    CHECK(e.multiply(a, b).fiber == IntegerVector{1});
    CHECK(e.multiply(b, a).fiber == IntegerVector{0});
    CHECK(e.evaluate(parse_word("abAB")).fiber == IntegerVector{1});
    CHECK(e.evaluate(parse_word("baBA")).fiber == IntegerVector{-1});
    CHECK(e.multiply(a, e.inverse(a)) == e.identity());
    CHECK_THROWS_AS(e.lift_generator(3), PreconditionError);
    CHECK_THROWS_AS(CentralExtension(2, 1), PreconditionError);
}

TEST_CASE("fiber is the vector of level-(k+1) coefficients") {
    Rng rng(31);
    for (int q = 2; q <= 3; ++q) {
        for (int k = 2; k <= 4; ++k) {
            const CentralExtension e(q, k);
            for (int trial = 0; trial < 20; ++trial) {
                const Word w = random_word(rng, q, 10);
                const auto p = magnus_expand(w, k + 1);
                IntegerVector expected;
                for (const Sequence& i : e.basis()) expected.push_back(p.coefficient(i));
                const auto x = e.evaluate(w);
                CHECK(x.fiber == expected);
                CHECK(x.base == Element(w, k));
            }
        }
    }
}

TEST_CASE("associativity, identity and inverses") {
    Rng rng(6);
    const CentralExtension e(2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ExtensionElement> g;
        for (int i = 0; i < 3; ++i) {
            auto x = e.evaluate(random_word(rng, 2, 8));
            for (auto& v : x.fiber) v += rng.between(-2, 2);
            g.push_back(x);
        }
        CHECK(e.multiply(e.multiply(g[0], g[1]), g[2]) == e.multiply(g[0], e.multiply(g[1], g[2])));
        CHECK(e.multiply(g[0], e.identity()) == g[0]);
        CHECK(e.multiply(e.inverse(g[1]), g[1]) == e.identity());
    }
}

TEST_CASE("extension and level-(k+1) normal form induce the same equivalence") {
    Rng rng(12);
    for (int k = 2; k <= 3; ++k) {
        const CentralExtension e(2, k);
        for (int trial = 0; trial < 60; ++trial) {
            const Word u = random_word(rng, 2, 10);
            const Word v = trial % 2 == 0 ? u * random_Fk_element(rng, 2, trial % 4 == 0 ? k : k + 1)
                                           : random_word(rng, 2, 10);
            CHECK((e.evaluate(u) == e.evaluate(v)) == equal_mod_Fk(u, v, k + 1));
        }
    }
}

TEST_CASE("s_map on standard commutators is the identity") {
    for (int q = 2; q <= 3; ++q) {
        for (int k = 2; k <= (q == 2 ? 5 : 4); ++k) {
            const auto basis = standard_sequences(q, k);
            for (std::size_t r = 0; r < basis.size(); ++r) {
                const IntegerVector row = s_map(standard_commutator(basis[r]), q, k);
                for (std::size_t c = 0; c < basis.size(); ++c) CHECK(row[c] == (r == c ? 1 : 0));
            }
        }
    }
    CHECK_THROWS_AS(s_map(parse_word("ab"), 2, 2), PreconditionError);
}

TEST_CASE("pairing by both paths") {
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = rng.between(2, 4);
        const Word w = random_Fk_element(rng, 2, k);
        const auto ev = evaluate_word_in_extension(w, 2, k);
        REQUIRE(ev.in_Fk);
        const auto basis = standard_sequences(2, k);
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(pairing(basis[i], w) == ev.element.fiber[i]);
    }
    CHECK_FALSE(evaluate_word_in_extension(parse_word("ab"), 2, 2).in_Fk);
    CHECK(pairing(Sequence{1, 2}, parse_word("abAB")) == 1);
    CHECK_THROWS_AS(pairing(Sequence{1, 2}, parse_word("a")), PreconditionError);
}
