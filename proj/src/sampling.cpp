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

#include "nilcoh/sampling.hpp"

#include <limits>

namespace nilcoh {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw PreconditionError("Rng::below needs a positive range");
    // Rejection sampling on the largest multiple of n.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % n;
}

int Rng::between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t Rng::shard_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Word random_nonempty_word(Rng& rng, int q, int max_length) {
    std::vector<Letter> letters;
    const int length = rng.between(1, std::max(1, max_length));
    for (int i = 0; i < length; ++i) {
        const int draw = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * q)));
        letters.push_back(Letter{draw / 2 + 1, draw % 2 == 0 ? 1 : -1});
    }
    return Word(std::move(letters));
}

Word random_word(Rng& rng, int q, int max_length) {
    if (rng.between(0, max_length) == 0) return Word();
    return random_nonempty_word(rng, q, max_length);
}

Word random_commutator(Rng& rng, int q, int weight) {
    std::vector<Word> parts;
    for (int i = 0; i < weight; ++i) parts.push_back(random_nonempty_word(rng, q, 3));
    return left_normed_commutator(parts);
}

Word random_Fk_element(Rng& rng, int q, int k) {
    Word out;
    const int factors = rng.between(1, 3);
    for (int i = 0; i < factors; ++i) {
        Word c = random_commutator(rng, q, k);
        out *= rng.below(2) == 0 ? c : c.inverse();
    }
    return normalize(out);
}

}  // namespace nilcoh
