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
// Truncated non-commutative polynomials and the Magnus expansion of F modulo
// the ideal of words of length >= k, plus the shuffle relations that cut out
// its image.

#ifndef NILCOH_MAGNUS_HPP
#define NILCOH_MAGNUS_HPP

#include <map>
#include <string>

#include "nilcoh/basic.hpp"
#include "nilcoh/words.hpp"

namespace nilcoh {

// Element of Z<X_1..X_q> / J_k. Only monomials of length < degree_bound are
// stored and zero coefficients are never stored.
class TruncatedPolynomial {
public:
    using Terms = std::map<Sequence, Integer, ShortLexLess>;

    explicit TruncatedPolynomial(int degree_bound);
    static TruncatedPolynomial one(int degree_bound);

    int degree_bound() const { return degree_bound_; }
    const Terms& terms() const { return terms_; }

    // beta_I; zero when absent. Throws PreconditionError if |I| >= bound.
    Integer coefficient(std::span<const int> index) const;
    // Lookup without the copy; returns nullptr for zero.
    const Integer* find(std::span<const int> index) const;

    void add_term(const Sequence& index, const Integer& value);

    bool is_one() const;
    TruncatedPolynomial truncated(int new_bound) const;
    // Terms of exactly the given length.
    TruncatedPolynomial homogeneous_part(int degree) const;
    // Smallest length >= 1 carrying a non-zero coefficient, or degree_bound.
    int lowest_nonconstant_degree() const;

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        return a += b;
    }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        return a -= b;
    }
    // Product truncated at min of the two bounds.
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                                         const TruncatedPolynomial& b);

    // Right multiplication by M(x_g^sign), cheaper than a general product.
    void multiply_by_letter(Letter letter);

    bool operator==(const TruncatedPolynomial& other) const {
        return degree_bound_ == other.degree_bound_ && terms_ == other.terms_;
    }

private:
    int degree_bound_;
    Terms terms_;
};

// "1 + X1X2 - X2X1" in canonical monomial order.
std::string to_string(const TruncatedPolynomial& p);

TruncatedPolynomial magnus_expand(const Word& w, int degree_bound);

// beta_I(p).
Integer coefficient(const TruncatedPolynomial& p, std::span<const int> index);

// c_I(w) = beta_I(M(w)) computed modulo J_k.
Integer magnus_coefficient(std::span<const int> index, const Word& w, int degree_bound);

// Decides equality in F/F_k through injectivity of M on F/F_k.
bool equal_mod_Fk(const Word& u, const Word& v, int k);

// Whether w lies in F_k (its expansion modulo J_k is 1).
bool in_Fk(const Word& w, int k);

// Multiset of resulting shuffles (with overlaps where letters agree), counted
// once per pair of index maps.
using ShuffleSet = std::map<Sequence, std::size_t, ShortLexLess>;
ShuffleSet shuffles(std::span<const int> first, std::span<const int> second);

// a_J a_K = sum_{L in Sh(J,K)} a_L for all non-empty J, K with |J|+|K| < bound.
// Letters absent from p make both sides vanish, so only letters that occur in
// p are enumerated.
bool satisfies_shuffle_relations(const TruncatedPolynomial& p);

}  // namespace nilcoh

#endif  // NILCOH_MAGNUS_HPP
