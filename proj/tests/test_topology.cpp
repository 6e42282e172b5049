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

#include "nilcoh/sampling.hpp"
#include "nilcoh/topology.hpp"

using namespace nilcoh;

namespace {

const Word kX1 = Word::generator(1);
const Word kX2 = Word::generator(2);

LongitudeSystem single(int q, int component, const Word& w) { return LongitudeSystem{q, {{component, w}}}; }

}  // namespace

TEST_CASE("assumption A_k") {
    const Word c = commutator(kX1, kX2);
    CHECK(check_assumption(single(3, 3, c), 2).at(3));
    CHECK_FALSE(check_assumption(single(3, 3, c), 3).at(3));
    for (int k = 1; k <= 5; ++k) CHECK(check_assumption(single(3, 3, Word()), k).at(3));
}

TEST_CASE("Borromean-type values") {
    const Word c = commutator(kX1, kX2);
    const auto ls = single(3, 3, c);
    CHECK(milnor_mu(ls, Sequence{1, 2}, 3) == 1);
    CHECK(milnor_mu(ls, Sequence{2, 1}, 3) == -1);
    CHECK(milnor_mu(single(3, 3, power(c, 2)), Sequence{1, 2}, 3) == 2);
    CHECK(mu_pairing_crosscheck(ls, Sequence{1, 2}, 3) == std::pair<Integer, Integer>{1, 1});
    CHECK(mu_pairing_crosscheck(ls, Sequence{2, 1}, 3) == std::pair<Integer, Integer>{-1, -1});
    const auto deeper = single(3, 3, commutator(kX1, c));
    const auto [a, b] = mu_pairing_crosscheck(deeper, Sequence{1, 1, 2}, 3);
    CHECK(a == b);
    CHECK(a == 1);
    // Linking number.
    CHECK(milnor_mu(single(2, 1, kX2), Sequence{2}, 1) == 1);
    CHECK_THROWS_AS(milnor_mu(ls, Sequence{1, 2, 1}, 3), PreconditionError);
    CHECK_THROWS_AS(mu_pairing_crosscheck(ls, Sequence{3, 2}, 3), PreconditionError);
}

TEST_CASE("crosscheck on sampled longitudes") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = rng.between(2, 4);
        const int l = rng.between(1, 3);
        const Word w = random_Fk_element(rng, 3, k);
        for (const Sequence& i : standard_sequences(3, k)) {
            if (i.front() == l) continue;
            const auto [mu, second] = mu_pairing_crosscheck(single(3, l, w), i, l);
            CHECK(mu == second);
        }
    }
}

TEST_CASE("endomorphisms") {
    const FreeEndomorphism f({kX1 * commutator(kX1, kX2), kX2});
    const FreeEndomorphism g({kX2, kX1});
    CHECK(normalize(f.apply(parse_word("ab"))) == normalize(kX1 * commutator(kX1, kX2) * kX2));
    CHECK(normalize(compose(g, f).image(1)) == normalize(kX2 * commutator(kX2, kX1)));
    CHECK(compose(f, FreeEndomorphism::identity(2)).images() == f.images());
    CHECK_THROWS_AS(f.image(3), PreconditionError);
}

TEST_CASE("Torelli depth") {
    const Word c = commutator(kX1, kX2);
    CHECK(torelli_depth(FreeEndomorphism::identity(2), 6) == 6);
    CHECK(torelli_depth(FreeEndomorphism({kX1 * c, kX2}), 6) == 2);
    CHECK(torelli_depth(FreeEndomorphism({kX1 * commutator(kX1, c), kX2}), 6) == 3);
    CHECK(torelli_depth(FreeEndomorphism({kX2, kX1}), 6) == 1);
}

TEST_CASE("Johnson homomorphism") {
    const Word c = commutator(kX1, kX2);
    const auto tau = johnson_tau(FreeEndomorphism({kX1 * c, kX2}), 2);
    CHECK(tau.components[0].coefficient(Sequence{1, 2}) == 1);
    CHECK(tau.components[0].coefficient(Sequence{2, 1}) == -1);
    CHECK(to_string(tau.components[0]) == "X1X2 - X2X1");
    CHECK(to_string(tau.components[1]) == "0");
    CHECK(johnson_tau(FreeEndomorphism({c * kX1, kX2}), 2) == tau);
    CHECK(johnson_tau(FreeEndomorphism::identity(3), 4).is_zero());
    CHECK_THROWS_AS(johnson_tau(FreeEndomorphism({kX1 * c, kX2}), 3), PreconditionError);
}

TEST_CASE("tau_k vanishes exactly on T(k+1)") {
    Rng rng(43);
    int zero = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int k = rng.between(2, 3);
        std::vector<Word> images;
        for (int i = 1; i <= 2; ++i) {
            Word image = Word::generator(i);
            if (rng.below(3) != 0) image *= random_Fk_element(rng, 2, rng.between(k, k + 1));
            images.push_back(image);
        }
        const FreeEndomorphism f(images);
        const bool vanishes = johnson_tau(f, k).is_zero();
        zero += vanishes ? 1 : 0;
        CHECK(vanishes == (torelli_depth(f, k + 1) >= k + 1));
    }
    // Both outcomes occur.
    CHECK(zero > 0);
    CHECK(zero < 100);
}

TEST_CASE("Morita vanishing criterion") {
    const Word c = commutator(kX1, kX2);
    CHECK(morita_vanishes(FreeEndomorphism::identity(2), 2));
    CHECK_FALSE(morita_vanishes(FreeEndomorphism({kX1 * c, kX2}), 2));
    CHECK(morita_vanishes(FreeEndomorphism({kX1 * commutator(c, kX2), kX2}), 2));
}
