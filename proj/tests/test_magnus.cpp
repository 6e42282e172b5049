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

#include <map>

#include "nilcoh/magnus.hpp"
#include "nilcoh/sampling.hpp"

using namespace nilcoh;

namespace {

using Dense = std::map<Sequence, Integer>;

// Slow oracle: multiply the full per-letter series, truncating only at the end
// of each product.
Dense dense_magnus(const Word& w, int bound) {
    Dense acc{{Sequence{}, 1}};
    for (const Letter& l : w.letters()) {
        Dense factor{{Sequence{}, 1}};
        for (int m = 1; m < bound; ++m) {
            if (l.sign > 0 && m > 1) break;
            factor[Sequence(static_cast<std::size_t>(m), l.generator)] = (l.sign > 0 || m % 2 == 0) ? 1 : -1;
        }
        Dense next;
        for (const auto& [a, x] : acc) {
            for (const auto& [b, y] : factor) {
                Sequence ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                if (static_cast<int>(ab.size()) < bound) next[ab] += x * y;
            }
        }
        acc.clear();
        for (const auto& [s, v] : next) {
            if (v != 0) acc[s] = v;
        }
    }
    return acc;
}

Dense as_dense(const TruncatedPolynomial& p) { return Dense(p.terms().begin(), p.terms().end()); }

Integer binomial(long n, int m) {
    // Generalised: n (n-1) ... (n-m+1) / m!.
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < m; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

TEST_CASE("expansion of a commutator") {
    const TruncatedPolynomial p = magnus_expand(parse_word("abAB"), 3);
    CHECK(to_string(p) == "1 + X1X2 - X2X1");
    CHECK(to_string(magnus_expand(parse_word("A"), 4)) == "1 - X1 + X1X1 - X1X1X1");
    CHECK(to_string(magnus_expand(Word(), 5)) == "1");
    CHECK(p.coefficient(Sequence{}) == 1);
    CHECK_THROWS_AS(p.coefficient(Sequence{1, 2, 1}), PreconditionError);
}

TEST_CASE("expansion agrees with the dense oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = rng.between(1, 3);
        const int bound = rng.between(1, 6);
        const Word w = random_word(rng, q, 10);
        CHECK(as_dense(magnus_expand(w, bound)) == dense_magnus(w, bound));
    }
}

TEST_CASE("powers of a generator give binomial coefficients") {
    for (long n = -4; n <= 4; ++n) {
        const auto p = magnus_expand(power(Word::generator(2), n), 6);
        for (int m = 0; m < 6; ++m) CHECK(p.coefficient(Sequence(static_cast<std::size_t>(m), 2)) == binomial(n, m));
    }
}

TEST_CASE("truncation helpers") {
    const auto p = magnus_expand(parse_word("aab"), 4);
    CHECK(p.truncated(2) == magnus_expand(parse_word("aab"), 2));
    CHECK(to_string(p.homogeneous_part(2)) == "X1X1 + 2X1X2");
    CHECK(p.lowest_nonconstant_degree() == 1);
    CHECK(magnus_expand(parse_word("abAB"), 5).lowest_nonconstant_degree() == 2);
    CHECK(magnus_expand(Word(), 5).lowest_nonconstant_degree() == 5);
}

TEST_CASE("lower central series membership") {
    const Word c2 = parse_word("abAB");
    const Word c3 = commutator(c2, parse_word("b"));
    CHECK(in_Fk(c2, 2));
    CHECK_FALSE(in_Fk(c2, 3));
    CHECK(in_Fk(c3, 3));
    CHECK_FALSE(in_Fk(c3, 4));
    CHECK(equal_mod_Fk(parse_word("ab"), parse_word("ba"), 2));
    CHECK_FALSE(equal_mod_Fk(parse_word("ab"), parse_word("ba"), 3));
    CHECK(equal_mod_Fk(parse_word("ab") * c3, parse_word("ab"), 3));
}

TEST_CASE("shuffles with overlap") {
    CHECK(shuffles(Sequence{1}, Sequence{1}) == ShuffleSet{{{1}, 1}, {{1, 1}, 2}});
    CHECK(shuffles(Sequence{1}, Sequence{2}) == ShuffleSet{{{1, 2}, 1}, {{2, 1}, 1}});
    CHECK(shuffles(Sequence{1, 1}, Sequence{1}) == ShuffleSet{{{1, 1}, 2}, {{1, 1, 1}, 3}});
    CHECK_THROWS_AS(shuffles(Sequence{1, 2}, Sequence{}), PreconditionError);
    // Without shared letters the count is the binomial (m+n choose m).
    std::size_t total = 0;
    for (const auto& [s, n] : shuffles(Sequence{1, 2}, Sequence{3, 4, 5})) total += n;
    CHECK(total == 10);
}

TEST_CASE("Magnus image satisfies the shuffle relations") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = magnus_expand(random_word(rng, 3, 10), 5);
        CHECK(satisfies_shuffle_relations(p));
    }
    auto p = magnus_expand(parse_word("ab"), 3);
    p.add_term(Sequence{1, 2}, 1);
    CHECK_FALSE(satisfies_shuffle_relations(p));
    CHECK_THROWS_AS(satisfies_shuffle_relations(TruncatedPolynomial(3)), PreconditionError);
}

TEST_CASE("multiplicativity and inverses") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = random_word(rng, 3, 8);
        const Word v = random_word(rng, 3, 8);
        CHECK(magnus_expand(u * v, 5) == magnus_expand(u, 5) * magnus_expand(v, 5));
        CHECK((magnus_expand(u, 5) * magnus_expand(u.inverse(), 5)).is_one());
    }
}
