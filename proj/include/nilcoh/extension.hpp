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
// The central extension of F/F_k by Z^{N_k} classified by the Massey
// 2-cocycles, and the pairing of those cocycles with elements of F_k.

#ifndef NILCOH_EXTENSION_HPP
#define NILCOH_EXTENSION_HPP

#include <vector>

#include "nilcoh/cochain.hpp"
#include "nilcoh/lattice.hpp"

namespace nilcoh {

struct ExtensionElement {
    NilpotentElement base;
    // Indexed by the standard sequences of length k in lexicographic order.
    IntegerVector fiber;

    bool operator==(const ExtensionElement&) const = default;
};

// (g, a)(h, b) = (gh, a + b + (massey2_I(g, h))_I).
class CentralExtension {
public:
    CentralExtension(int q, int k);

    int q() const { return q_; }
    int k() const { return k_; }
    const std::vector<Sequence>& basis() const { return basis_; }

    ExtensionElement identity() const;
    // (x_i, 0).
    ExtensionElement lift_generator(int generator) const;
    ExtensionElement multiply(const ExtensionElement& a, const ExtensionElement& b) const;
    ExtensionElement inverse(const ExtensionElement& a) const;

    // Letter-by-letter evaluation with the lifts of the generators.
    ExtensionElement evaluate(const Word& w) const;

    // The cocycle (massey2_I(g, h))_I.
    IntegerVector cocycle(const NilpotentElement& g, const NilpotentElement& h) const;

private:
    int q_;
    int k_;
    std::vector<Sequence> basis_;
    std::vector<Cochain> cocycles_;
};

struct ExtensionEvaluation {
    ExtensionElement element;
    // Whether w lies in F_k, so that the fiber is the pairing.
    bool in_Fk;
};

ExtensionEvaluation evaluate_word_in_extension(const Word& w, int q, int k);

// c_I(w) at truncation k+1 for w in F_k, |I| = k.
Integer pairing(std::span<const int> index, const Word& w);

// (c_I(w))_{I standard of length k} for w in F_k.
IntegerVector s_map(const Word& w, int q, int k);

}  // namespace nilcoh

#endif  // NILCOH_EXTENSION_HPP
