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

#include <algorithm>
#include <set>

#include "nilcoh/magnus.hpp"
#include "nilcoh/words.hpp"

using namespace nilcoh;

namespace {

// All q^k sequences, odometer style.
std::vector<Sequence> all_sequences(int q, int k) {
    std::vector<Sequence> out;
    Sequence s(static_cast<std::size_t>(k), 1);
    while (true) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == q) s[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) return out;
        ++s[static_cast<std::size_t>(i)];
    }
}

// Lyndon by rotations: strictly smaller than every non-trivial rotation.
bool lyndon_by_rotation(const Sequence& s) {
    for (std::size_t r = 1; r < s.size(); ++r) {
        Sequence rot(s.begin() + static_cast<long>(r), s.end());
        rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
        if (!(s < rot)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Witt numbers against tabulated values") {
    const std::vector<int> q2{2, 1, 2, 3, 6, 9, 18, 30};
    const std::vector<int> q3{3, 3, 8, 18, 48, 116, 312, 810};
    for (int k = 1; k <= 8; ++k) {
        CHECK(witt_number(2, k).value == q2[static_cast<std::size_t>(k - 1)]);
        CHECK(witt_number(3, k).value == q3[static_cast<std::size_t>(k - 1)]);
    }
    CHECK(witt_number(1, 1).value == 1);
    CHECK(witt_number(1, 5).value == 0);
    CHECK_THROWS_AS(witt_number(0, 2), PreconditionError);
}

TEST_CASE("Mobius function") {
    const std::vector<int> expected{1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("standard sequences agree with the rotation definition") {
    for (int q = 1; q <= 4; ++q) {
        for (int k = 1; k <= (q <= 2 ? 8 : 5); ++k) {
            std::vector<Sequence> expected;
            for (const Sequence& s : all_sequences(q, k)) {
                if (lyndon_by_rotation(s)) expected.push_back(s);
            }
            const auto got = standard_sequences(q, k);
            CHECK(std::set<Sequence>(got.begin(), got.end()) == std::set<Sequence>(expected.begin(), expected.end()));
            CHECK(got.size() == expected.size());
            CHECK(Integer(got.size()) == witt_number(q, k).value);
            for (const Sequence& s : all_sequences(q, k)) CHECK(is_standard(s) == lyndon_by_rotation(s));
        }
    }
}

TEST_CASE("small lists") {
    CHECK(standard_sequences(2, 3) == std::vector<Sequence>{{1, 1, 2}, {1, 2, 2}});
    CHECK(standard_sequences(2, 4) == std::vector<Sequence>{{1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}});
    CHECK(standard_sequences(2, 1) == std::vector<Sequence>{{1}, {2}});
    CHECK_THROWS_AS(standard_sequences(9, 12, 1000), ResourceError);
}

TEST_CASE("standard factorization uses the longest proper standard suffix") {
    CHECK(standard_factorization(Sequence{1, 2}) == std::pair<Sequence, Sequence>{{1}, {2}});
    CHECK(standard_factorization(Sequence{1, 1, 2}) == std::pair<Sequence, Sequence>{{1}, {1, 2}});
    CHECK(standard_factorization(Sequence{1, 1, 2, 2}) == std::pair<Sequence, Sequence>{{1}, {1, 2, 2}});
    CHECK(standard_factorization(Sequence{1, 2, 1, 2, 2}) == std::pair<Sequence, Sequence>{{1, 2}, {1, 2, 2}});
    CHECK_THROWS_AS(standard_factorization(Sequence{2, 1}), PreconditionError);
}

TEST_CASE("word syntax") {
    const Word a = Word::generator(1);
    const Word b = Word::generator(2);
    CHECK(parse_word("abAB") == a * b * a.inverse() * b.inverse());
    CHECK(parse_word("x1 x2 x1^-1 x2^-1") == parse_word("abAB"));
    CHECK(parse_word(" a b ") == a * b);
    CHECK(parse_word("x3^2") == Word::generator(3) * Word::generator(3));
    CHECK(parse_word("1").empty());
    CHECK(parse_word("").empty());
    CHECK(to_string(parse_word("abAB")) == "abAB");
    CHECK_THROWS_AS(parse_word("a?b"), PreconditionError);
    CHECK_THROWS_AS(parse_word("x0"), PreconditionError);
}

TEST_CASE("free reduction and commutators") {
    const Word a = Word::generator(1);
    const Word b = Word::generator(2);
    CHECK(normalize(parse_word("abBA")).empty());
    CHECK(normalize(parse_word("aabBcC")) == parse_word("aa"));
    CHECK(commutator(a, b) == parse_word("abAB"));
    CHECK(commutator(a, a).empty());
    CHECK(power(a * b, 2) == parse_word("abab"));
    CHECK(power(a * b, -1) == parse_word("BA"));
    CHECK(power(a, 0).empty());
    CHECK(left_normed_commutator({a, b, b}) == commutator(commutator(a, b), b));
}

TEST_CASE("standard commutators satisfy the delta property") {
    for (int q = 2; q <= 3; ++q) {
        for (int k = 1; k <= (q == 2 ? 6 : 5); ++k) {
            const auto list = standard_sequences(q, k);
            for (const Sequence& i : list) {
                const Word w = standard_commutator(i);
                CHECK(in_Fk(w, k));
                for (const Sequence& j : list) CHECK(magnus_coefficient(j, w, k + 1) == (i == j ? 1 : 0));
            }
        }
    }
    CHECK(standard_commutator(Sequence{1, 2}) == parse_word("abAB"));
    CHECK_THROWS_AS(standard_commutator(Sequence{2, 1}), PreconditionError);
}

TEST_CASE("index sequence text") {
    CHECK(parse_sequence("112") == Sequence{1, 1, 2});
    CHECK(parse_sequence("abc") == Sequence{1, 2, 3});
    CHECK(parse_sequence("1,12,3") == Sequence{1, 12, 3});
    CHECK(sequence_to_string(Sequence{1, 2}) == "12");
    CHECK(sequence_to_string(Sequence{1, 12}) == "1,12");
    CHECK(sequence_to_letters(Sequence{1, 2, 3}) == "abc");
    CHECK_THROWS_AS(parse_sequence("1,0"), PreconditionError);
}
