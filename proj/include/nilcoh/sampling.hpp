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
// Deterministic sampling of free-group words for property sweeps.
//
// Bounded draws are done by hand on top of std::mt19937_64 because the
// standard distributions are implementation-defined, and reports must be
// byte-identical across platforms.

#ifndef NILCOH_SAMPLING_HPP
#define NILCOH_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "nilcoh/words.hpp"

namespace nilcoh {

inline constexpr int kDefaultMaxWordLength = 12;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    int between(int lo, int hi);

    // Seed of the shard with the given index (splitmix64 of the pair).
    static std::uint64_t shard_seed(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
};

// Length uniform in [0, max_length]; letters uniform over x_1..x_q and inverses.
Word random_word(Rng& rng, int q, int max_length = kDefaultMaxWordLength);
Word random_nonempty_word(Rng& rng, int q, int max_length);

// Left-normed commutator of `weight` random short words; lies in F_weight.
Word random_commutator(Rng& rng, int q, int weight);

// Product of 1 to 3 random weight-k commutators or their inverses.
Word random_Fk_element(Rng& rng, int q, int k);

}  // namespace nilcoh

#endif  // NILCOH_SAMPLING_HPP
