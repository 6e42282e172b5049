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
// Explicit 3-cocycles of F/F_k, the index census of the 3-cocycle basis, and
// 2- and 3-cocycles of quotients of F/F_{k+1} by central standard
// commutators.
//
// All cochains here are evaluated on elements of level k+1; statements "on
// F/F_k" are checked by perturbing arguments with elements of F_k.

#ifndef NILCOH_COCYCLE3_HPP
#define NILCOH_COCYCLE3_HPP

#include <vector>

#include "nilcoh/cochain.hpp"
#include "nilcoh/lattice.hpp"

namespace nilcoh {

// (x,y,z) -> c_s(x) sum_{j=1}^{l-1} c_{i_1..i_j}(y) c_{i_{j+1}..i_l}(z), any l.
Cochain gamma_cochain(int s, std::span<const int> index);

// Gamma_{sI} for a standard I of length k >= 3.
Cochain gamma3(int s, std::span<const int> index, int k);

// The correction b for |I| = k+1, with P = i_1..i_k, A = i_1, Z = i_{k+1},
// S = i_2..i_{k+1}:
//   b(x,y) = c_s(x) c_P(y) c_Z(y) - c_{sA}(x) c_S(y) + c_{sZ}(x) c_P(y).
Cochain b_correction(int s, std::span<const int> index, int k);
// The same three terms all with a plus sign.
Cochain b_correction_literal(int s, std::span<const int> index, int k);

// Gamma_{sI} - d b for a standard I of length k+1.
Cochain corrected_3cocycle(int s, std::span<const int> index, int k);
// Term-by-term transcription of the two-line expanded formula.
Cochain corrected_3cocycle_display(int s, std::span<const int> index, int k);
// Expanded form of Gamma_{sI} - d b in which every coefficient has length < k.
Cochain corrected_3cocycle_closed_form(int s, std::span<const int> index, int k);

struct CensusEntry {
    int length;  // l
    Sequence index;
    int s;
    bool has_expression;  // l in {k, k+1}
};

struct CensusSlice {
    int length;
    std::size_t listed;       // |{(I, s) : I.s not standard}|
    Integer rank;             // q N_l - N_{l+1}
};

struct Census {
    int q;
    int k;
    std::vector<CensusEntry> entries;
    std::vector<CensusSlice> slices;
    Integer total_rank;         // sum of the slice ranks
    std::size_t total_listed;   // sum of the slice list sizes
};

// For every l in [k, 2k-2]: the pairs (I in U_l, s <= q) with I.s not standard.
Census census_basis3(int q, int k);

// F/F_{k+1} modulo the central standard commutators W_j of the given
// mutually distinct standard sequences of length k.
class CentralQuotientGroup {
public:
    CentralQuotientGroup(int q, int k, std::vector<Sequence> relators);

    int q() const { return q_; }
    int k() const { return k_; }
    const std::vector<Sequence>& relators() const { return relators_; }
    const std::vector<Word>& relator_words() const { return relator_words_; }

    NilpotentElement element(const Word& w) const { return NilpotentElement(w, k_ + 1); }
    bool equal(const NilpotentElement& u, const NilpotentElement& v) const;

private:
    int q_;
    int k_;
    std::vector<Sequence> relators_;
    std::vector<Word> relator_words_;
    IntegerLattice lattice_;
};

// (X,Y) -> sum_l c_{i_1..i_l}(X) c_{i_{l+1}..i_k}(Y) for the j-th relator (0-based).
Cochain phi_cocycle(const CentralQuotientGroup& g, std::size_t j);

// A(x,y) = sum_{1<=l<k} c_{r i_1..i_l}(x) c_{i_{l+1}..i_k}(y), with
// d A = -alpha_r cup phi.
Cochain triple_massey_left(const CentralQuotientGroup& g, int r, std::size_t j);
// B(x,y) = sum_{1<=l<k} c_{i_1..i_l}(x) c_{i_{l+1}..i_k s}(y), with
// d B = phi cup alpha_s.
Cochain triple_massey_right(const CentralQuotientGroup& g, std::size_t j, int s);
// The cobounding cochains with the literal ranges (1<=l<k and 1<l<=k).
Cochain triple_massey_left_literal(const CentralQuotientGroup& g, int r, std::size_t j);
Cochain triple_massey_right_literal(const CentralQuotientGroup& g, std::size_t j, int s);

// (x,y,z) -> c_r(x) B(y,z) - A(x,y) c_s(z).
Cochain triple_massey(const CentralQuotientGroup& g, int r, std::size_t j, int s);

// Whether A and B are unchanged when an argument is multiplied by a relator,
// i.e. c_{r i_1..i_{k-1}} and c_{i_2..i_k s} vanish on every W_j'.
bool triple_massey_defined_on_quotient(const CentralQuotientGroup& g, int r, std::size_t j, int s);

}  // namespace nilcoh

#endif  // NILCOH_COCYCLE3_HPP
