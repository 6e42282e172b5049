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
// Invariant differential forms on the image of the Magnus expansion: polynomial
// coefficients in the coordinates beta_w, wedge products of the basis 1-forms
// dX_w, gamma-forms and the Massey 2-forms built from them.
//
// Text syntax: terms "± [n] β_<w> ... dX_<w> ∧ dX_<w>", where <w> is a letter
// word (a = 1) or a braced comma list such as {1,12}. The parser also accepts
// "beta_", "^" for the wedge, "*" and juxtaposition for products, and
// parentheses.

#ifndef NILCOH_DERHAM_HPP
#define NILCOH_DERHAM_HPP

#include <map>
#include <string>
#include <vector>

#include "nilcoh/basic.hpp"
#include "nilcoh/magnus.hpp"

namespace nilcoh {

// Sorted multiset of beta variables.
using BetaMonomial = std::vector<Sequence>;
// Strictly increasing list of dX factors.
using WedgeMonomial = std::vector<Sequence>;

struct MonomialLess {
    bool operator()(const std::vector<Sequence>& a, const std::vector<Sequence>& b) const;
};

class BetaPolynomial {
public:
    using Terms = std::map<BetaMonomial, Integer, MonomialLess>;

    BetaPolynomial() = default;
    static BetaPolynomial constant(const Integer& value);
    // beta_w; beta of the empty word is 1.
    static BetaPolynomial variable(Sequence w);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(BetaMonomial monomial, const Integer& value);

    BetaPolynomial& operator+=(const BetaPolynomial& other);
    friend BetaPolynomial operator+(BetaPolynomial a, const BetaPolynomial& b) { return a += b; }
    friend BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b);
    friend BetaPolynomial operator*(const Integer& scalar, const BetaPolynomial& a);

    // Value at the point whose coordinates are the coefficients of p.
    Integer evaluate(const TruncatedPolynomial& p) const;

    bool operator==(const BetaPolynomial&) const = default;

private:
    Terms terms_;
};

// Element of the exterior algebra over the beta-polynomials. Terms of several
// grades may coexist (the parser can produce them); operations keep them apart.
class DifferentialForm {
public:
    using Terms = std::map<WedgeMonomial, BetaPolynomial, MonomialLess>;

    DifferentialForm() = default;
    static DifferentialForm function(const BetaPolynomial& p);
    // dX_w; dX of the empty word is 0.
    static DifferentialForm basis(Sequence w);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // The common grade, or -1 for the zero form or mixed grades.
    int grade() const;

    // Adds coefficient * (factors in the given order), sorting them with sign.
    void add_term(std::vector<Sequence> factors, const BetaPolynomial& coefficient);

    DifferentialForm& operator+=(const DifferentialForm& other);
    DifferentialForm& operator-=(const DifferentialForm& other);
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
    friend DifferentialForm operator*(const Integer& scalar, const DifferentialForm& a);

    bool operator==(const DifferentialForm&) const = default;

private:
    Terms terms_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_d(const DifferentialForm& form);

// Which multiplication the forms are invariant under. kRight: p -> p M(x_h)
// (beta_w -> beta_w + [w ends in h] beta_{w minus last}); kLeft is the mirror
// image under word reversal.
enum class Side { kRight, kLeft };

DifferentialForm pullback(const DifferentialForm& form, int h, Side side = Side::kRight);

// gamma_J = sum over splittings J = P Q with P non-empty, and over
// compositions of Q into u non-empty blocks, of (-1)^u prod beta_block dX_P
// (kRight); kLeft mirrors the word.
DifferentialForm gamma_form(std::span<const int> index, Side side = Side::kRight);

// sum_{r=1}^{k-1} gamma_{i_1..i_r} wedge gamma_{i_{r+1}..i_k}.
DifferentialForm massey_2form(std::span<const int> index, Side side = Side::kRight);

// Canonical text: terms ordered by beta degree, beta monomial, dX monomial.
std::string to_string(const DifferentialForm& form, bool ascii = false);
std::string to_string(const BetaPolynomial& p, bool ascii = false);
// Accepts the canonical text, the ascii form, and TeX spellings (\beta_{bc},
// \wedge, "d X_c"); juxtaposition is the wedge product.
DifferentialForm parse_form(const std::string& text);

// 1-form at base point `point` on the tangent vector `vector`.
Integer evaluate_1form(const DifferentialForm& form, const TruncatedPolynomial& point,
                       const TruncatedPolynomial& vector);
// 2-form at `point` on the pair of tangent vectors.
Integer evaluate_2form(const DifferentialForm& form, const TruncatedPolynomial& point,
                       const TruncatedPolynomial& u, const TruncatedPolynomial& v);

// Reference expressions for small indices, kept verbatim (letters a, b, c, d
// are 1, 2, 3, 4) for comparison after canonical normalisation.
struct ReferenceForm {
    std::string name;
    Sequence index;
    bool massey;  // a Massey 2-form rather than a gamma-form
    std::string text;
};

const std::vector<ReferenceForm>& reference_forms();

}  // namespace nilcoh

#endif  // NILCOH_DERHAM_HPP
