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

#include "nilcoh/cocycle3.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "nilcoh/extension.hpp"

namespace nilcoh {

namespace {

// i_a .. i_b with 1-based inclusive bounds; empty when a > b.
Sequence part(std::span<const int> index, int a, int b) {
    if (a > b) return {};
    return subsequence(index, static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b));
}

Sequence prepend(int s, const Sequence& tail) {
    Sequence out{s};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Sequence append(Sequence head, int s) {
    head.push_back(s);
    return head;
}

using Factors = std::vector<std::pair<int, Sequence>>;

Cochain term(int degree, const Factors& factors) { return coefficient_product(degree, factors); }

void require_length(std::span<const int> index, int expected, const char* what) {
    if (static_cast<int>(index.size()) != expected) {
        throw PreconditionError(fmt::format("{} needs |I| = {}, got {}", what, expected, index.size()));
    }
}

void require_standard(std::span<const int> index, const char* what) {
    if (!is_standard(index)) {
        throw PreconditionError(fmt::format("{} needs a standard sequence, got {}", what, sequence_to_string(index)));
    }
}

}  // namespace

Cochain gamma_cochain(int s, std::span<const int> index) {
    return cup(Cochain::alpha(s), massey2(index));
}

Cochain gamma3(int s, std::span<const int> index, int k) {
    if (k < 3) throw PreconditionError("gamma3 needs k >= 3");
    require_length(index, k, "gamma3");
    require_standard(index, "gamma3");
    return gamma_cochain(s, index);
}

namespace {

struct Parts {
    Sequence p, s, a, z;
};

Parts split_k_plus_1(std::span<const int> index, int k) {
    return Parts{part(index, 1, k), part(index, 2, k + 1), part(index, 1, 1), part(index, k + 1, k + 1)};
}

Cochain b_terms(int s, std::span<const int> index, int k, int middle_sign) {
    if (k < 2) throw PreconditionError("the correction needs k >= 2");
    require_length(index, k + 1, "b_correction");
    const Parts ps = split_k_plus_1(index, k);
    Cochain first = term(2, {{0, {s}}, {1, ps.p}, {1, ps.z}});
    Cochain middle = term(2, {{0, prepend(s, ps.a)}, {1, ps.s}});
    Cochain last = term(2, {{0, prepend(s, ps.z)}, {1, ps.p}});
    return first + Integer(middle_sign) * middle + last;
}

}  // namespace

Cochain b_correction(int s, std::span<const int> index, int k) { return b_terms(s, index, k, -1); }

Cochain b_correction_literal(int s, std::span<const int> index, int k) { return b_terms(s, index, k, +1); }

Cochain corrected_3cocycle(int s, std::span<const int> index, int k) {
    if (k < 3) throw PreconditionError("corrected_3cocycle needs k >= 3");
    require_length(index, k + 1, "corrected_3cocycle");
    require_standard(index, "corrected_3cocycle");
    return gamma_cochain(s, index) - coboundary(b_correction(s, index, k));
}

Cochain corrected_3cocycle_display(int s, std::span<const int> index, int k) {
    if (k < 3) throw PreconditionError("corrected_3cocycle_display needs k >= 3");
    require_length(index, k + 1, "corrected_3cocycle_display");
    const int last = k + 1;
    const Sequence z = part(index, last, last);
    Cochain sum = Cochain::zero(3);
    for (int l = 2; l <= k; ++l) {
        sum = sum + term(3, {{0, {s}}, {1, part(index, 1, l)}, {2, part(index, l + 1, last)}});
        sum = sum - term(3, {{0, {s}}, {1, part(index, 1, l - 1)}, {2, part(index, l, last)}, {1, z}});
        sum = sum - term(3, {{0, {s}}, {1, part(index, 1, l - 1)}, {2, part(index, l, last)}, {2, z}});
        sum = sum - term(3, {{0, prepend(s, part(index, 1, 1))}, {1, part(index, 2, l)}, {2, part(index, l + 1, last)}});
        sum = sum - term(3, {{0, prepend(s, z)}, {1, part(index, 2, l - 1)}, {2, part(index, l, k)}});
    }
    return sum;
}

Cochain corrected_3cocycle_closed_form(int s, std::span<const int> index, int k) {
    if (k < 3) throw PreconditionError("corrected_3cocycle_closed_form needs k >= 3");
    require_length(index, k + 1, "corrected_3cocycle_closed_form");
    const int last = k + 1;
    const Sequence a = part(index, 1, 1);
    const Sequence z = part(index, last, last);
    Cochain sum = Cochain::zero(3);
    for (int j = 2; j <= k - 1; ++j) {
        sum = sum + term(3, {{0, {s}}, {1, part(index, 1, j)}, {2, part(index, j + 1, last)}});
    }
    for (int l = 2; l <= k; ++l) {
        const Sequence head = part(index, 1, l - 1);
        const Sequence tail = part(index, l, k);
        sum = sum - term(3, {{0, {s}}, {1, head}, {2, tail}, {1, z}});
        sum = sum - term(3, {{0, {s}}, {1, head}, {2, tail}, {2, z}});
        sum = sum - term(3, {{0, prepend(s, z)}, {1, head}, {2, tail}});
        sum = sum + term(3, {{0, prepend(s, a)}, {1, part(index, 2, l)}, {2, part(index, l + 1, last)}});
    }
    return sum;
}

Census census_basis3(int q, int k) {
    if (k < 2) throw PreconditionError("census_basis3 needs k >= 2");
    Census census{q, k, {}, {}, 0, 0};
    for (int l = k; l <= 2 * k - 2; ++l) {
        std::size_t listed = 0;
        for (const Sequence& index : standard_sequences(q, l)) {
            for (int s = 1; s <= q; ++s) {
                if (is_standard(append(index, s))) continue;
                census.entries.push_back(CensusEntry{l, index, s, l <= k + 1});
                ++listed;
            }
        }
        Integer rank = Integer(q) * witt_number(q, l).value - witt_number(q, l + 1).value;
        census.slices.push_back(CensusSlice{l, listed, rank});
        census.total_rank += rank;
        census.total_listed += listed;
    }
    return census;
}

// --- quotient groups --------------------------------------------------------

CentralQuotientGroup::CentralQuotientGroup(int q, int k, std::vector<Sequence> relators)
    : q_(q), k_(k), relators_(std::move(relators)), lattice_(witt_number(q, k).value.convert_to<std::size_t>()) {
    if (k < 2) throw PreconditionError("quotient groups need k >= 2");
    std::set<Sequence> seen;
    for (const Sequence& r : relators_) {
        require_length(r, k, "relator");
        require_standard(r, "relator");
        if (*std::max_element(r.begin(), r.end()) > q) throw PreconditionError("relator index exceeds q");
        if (!seen.insert(r).second) throw PreconditionError("relators must be mutually distinct");
        relator_words_.push_back(standard_commutator(r));
        lattice_.add_generator(s_map(relator_words_.back(), q, k));
    }
}

bool CentralQuotientGroup::equal(const NilpotentElement& u, const NilpotentElement& v) const {
    const Word difference = normalize(u.representative() * v.representative().inverse());
    if (!in_Fk(difference, k_)) return false;
    return lattice_.contains(s_map(difference, q_, k_));
}

Cochain phi_cocycle(const CentralQuotientGroup& g, std::size_t j) {
    if (j >= g.relators().size()) throw PreconditionError("relator index out of range");
    return massey2(g.relators()[j]);
}

namespace {

const Sequence& relator(const CentralQuotientGroup& g, std::size_t j) {
    if (j >= g.relators().size()) throw PreconditionError("relator index out of range");
    return g.relators()[j];
}

Cochain left_sum(const Sequence& index, int r, int first, int last) {
    const int k = static_cast<int>(index.size());
    Cochain sum = Cochain::zero(2);
    for (int l = first; l <= last; ++l) {
        sum = sum + term(2, {{0, prepend(r, part(index, 1, l))}, {1, part(index, l + 1, k)}});
    }
    return sum;
}

Cochain right_sum(const Sequence& index, int s, int first, int last) {
    const int k = static_cast<int>(index.size());
    Cochain sum = Cochain::zero(2);
    for (int l = first; l <= last; ++l) {
        sum = sum + term(2, {{0, part(index, 1, l)}, {1, append(part(index, l + 1, k), s)}});
    }
    return sum;
}

}  // namespace

Cochain triple_massey_left(const CentralQuotientGroup& g, int r, std::size_t j) {
    return left_sum(relator(g, j), r, 1, g.k() - 1);
}

Cochain triple_massey_right(const CentralQuotientGroup& g, std::size_t j, int s) {
    return right_sum(relator(g, j), s, 1, g.k() - 1);
}

Cochain triple_massey_left_literal(const CentralQuotientGroup& g, int r, std::size_t j) {
    return left_sum(relator(g, j), r, 1, g.k() - 1);
}

Cochain triple_massey_right_literal(const CentralQuotientGroup& g, std::size_t j, int s) {
    return right_sum(relator(g, j), s, 2, g.k());
}

Cochain triple_massey(const CentralQuotientGroup& g, int r, std::size_t j, int s) {
    const Sequence& index = relator(g, j);
    const int k = g.k();
    if (k <= 2) throw PreconditionError("the triple Massey product needs k > 2");
    const Sequence left = prepend(r, part(index, 1, k - 1));
    const Sequence right = append(part(index, 2, k), s);
    for (const Sequence& other : g.relators()) {
        if (other == left || other == right) {
            throw PreconditionError(fmt::format("triple Massey product undefined: {} or {} is another relator",
                                                sequence_to_string(left), sequence_to_string(right)));
        }
    }
    return cup(Cochain::alpha(r), triple_massey_right(g, j, s)) - cup(triple_massey_left(g, r, j), Cochain::alpha(s));
}

bool triple_massey_defined_on_quotient(const CentralQuotientGroup& g, int r, std::size_t j, int s) {
    const Sequence& index = relator(g, j);
    const int k = g.k();
    const Sequence left = prepend(r, part(index, 1, k - 1));
    const Sequence right = append(part(index, 2, k), s);
    for (const Word& w : g.relator_words()) {
        const TruncatedPolynomial p = magnus_expand(w, k + 1);
        if (p.coefficient(left) != 0 || p.coefficient(right) != 0) return false;
    }
    return true;
}

}  // namespace nilcoh
