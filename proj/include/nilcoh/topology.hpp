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
// Milnor invariants of longitude words, and Torelli depth, Johnson
// homomorphisms and the Morita vanishing criterion for free-group
// endomorphisms.

#ifndef NILCOH_TOPOLOGY_HPP
#define NILCOH_TOPOLOGY_HPP

#include <map>
#include <utility>
#include <vector>

#include "nilcoh/magnus.hpp"
#include "nilcoh/words.hpp"

namespace nilcoh {

struct LongitudeSystem {
    int q;
    std::map<int, Word> longitudes;  // component -> w_l

    const Word& longitude(int component) const;
};

// Per component: whether M(w_l) = 1 modulo J_k.
std::map<int, bool> check_assumption(const LongitudeSystem& ls, int k);

// mu(I; l): the X_I coefficient of M(w_l) at truncation |I|+1. Requires the
// assumption at level |I| for component l.
Integer milnor_mu(const LongitudeSystem& ls, std::span<const int> index, int component);

// (mu(I; l), X_{I l} coefficient of M([w_l, x_l]) at truncation |I|+2).
// The second value is c_I(w_l) - [i_1 = l] c_{i_2..i_k l}(w_l), so i_1 != l is
// required.
std::pair<Integer, Integer> mu_pairing_crosscheck(const LongitudeSystem& ls, std::span<const int> index,
                                                  int component);

// x_i -> images[i-1].
class FreeEndomorphism {
public:
    explicit FreeEndomorphism(std::vector<Word> images);
    static FreeEndomorphism identity(int q);

    int rank() const { return static_cast<int>(images_.size()); }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(int generator) const;

    Word apply(const Word& w) const;

private:
    std::vector<Word> images_;
};

// (f o g)(x_i) = f(g(x_i)).
FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g);

// Largest k <= max_k with f(x_i) x_i^-1 in F_k for every i (at least 1).
int torelli_depth(const FreeEndomorphism& f, int max_k);

// Per generator, the degree-k part of M(f(x_i) x_i^-1) at truncation k+1.
struct JohnsonValue {
    int k;
    std::vector<TruncatedPolynomial> components;

    bool is_zero() const;
    bool operator==(const JohnsonValue&) const = default;
};

JohnsonValue johnson_tau(const FreeEndomorphism& f, int k);

// Componentwise sum, for the homomorphism property.
JohnsonValue operator+(const JohnsonValue& a, const JohnsonValue& b);

// Whether f lies in T(2k-1), the vanishing criterion for the Morita lift.
bool morita_vanishes(const FreeEndomorphism& f, int k);

}  // namespace nilcoh

#endif  // NILCOH_TOPOLOGY_HPP
