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
// Free-group words, standard (Lyndon) sequences, Witt numbers and standard
// commutators.

#ifndef NILCOH_WORDS_HPP
#define NILCOH_WORDS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nilcoh/basic.hpp"

namespace nilcoh {

struct Letter {
    int generator;  // 1..q
    int sign;       // +1 or -1

    auto operator<=>(const Letter&) const = default;
};

// An element of the free group F as a sequence of signed generators. Words are
// not reduced implicitly; `normalize` performs free reduction.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int index, int sign = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int max_generator() const;

    Word inverse() const;

    // Plain concatenation.
    friend Word operator*(const Word& a, const Word& b);
    Word& operator*=(const Word& other);

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

Word normalize(const Word& w);
Word power(const Word& w, long exponent);

// a b a^-1 b^-1, freely reduced.
Word commutator(const Word& a, const Word& b);

// Lowercase a, b, c, ... are x1, x2, x3, ...; uppercase are inverses;
// whitespace is ignored. Also accepts "x1 x2^-1 x3^2". "1" and "" are the
// identity.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);

// --- standard sequences -----------------------------------------------------

// I < (i_s ... i_k) for every proper suffix, with the prefix-is-smaller
// lexicographic order.
bool is_standard(std::span<const int> seq);

inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 28;

// All standard sequences of length k over {1..q} in lexicographic order.
// Throws ResourceError when q^k exceeds `bound`.
std::vector<Sequence> standard_sequences(int q, int k,
                                         std::uint64_t bound = kDefaultEnumerationBound);

struct WittNumber {
    int q;
    int k;
    Integer value;
};

int mobius(int n);
WittNumber witt_number(int q, int k);

// The longest proper suffix of a standard sequence that is itself standard,
// giving I = J K.
std::pair<Sequence, Sequence> standard_factorization(std::span<const int> seq);

// W_I in F_{|I|} with c_J(W_I) = delta_{I,J} for all standard J of length |I|.
Word standard_commutator(std::span<const int> seq);

// The plain bracket [W_J, W_K] along the standard factorization, before any
// correction by larger anagrams.
Word lyndon_bracket(std::span<const int> seq);

// Left-normed commutator [[...[a_1, a_2], ...], a_m].
Word left_normed_commutator(const std::vector<Word>& parts);

}  // namespace nilcoh

#endif  // NILCOH_WORDS_HPP
