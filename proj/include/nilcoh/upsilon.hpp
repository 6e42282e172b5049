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
// The unipotent matrix representation of F/F_k over the commutative ring
// Z[lambda_i^(j)].

#ifndef NILCOH_UPSILON_HPP
#define NILCOH_UPSILON_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcoh/basic.hpp"
#include "nilcoh/words.hpp"

namespace nilcoh {

// lambda_row^(generator): row in 1..k-1, generator in 1..q.
struct Lambda {
    int row;
    int generator;

    auto operator<=>(const Lambda&) const = default;
};

// Sparse commutative polynomial. Monomials are sorted variable multisets in
// graded-lex order.
class OmegaPolynomial {
public:
    using Monomial = std::vector<Lambda>;
    struct GradedLexLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        }
    };
    using Terms = std::map<Monomial, Integer, GradedLexLess>;

    OmegaPolynomial() = default;
    static OmegaPolynomial constant(const Integer& value);
    static OmegaPolynomial variable(Lambda lambda);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(Monomial monomial) const;
    void add_term(Monomial monomial, const Integer& value);

    OmegaPolynomial& operator+=(const OmegaPolynomial& other);
    OmegaPolynomial& operator-=(const OmegaPolynomial& other);
    friend OmegaPolynomial operator+(OmegaPolynomial a, const OmegaPolynomial& b) { return a += b; }
    friend OmegaPolynomial operator-(OmegaPolynomial a, const OmegaPolynomial& b) { return a -= b; }
    friend OmegaPolynomial operator*(const OmegaPolynomial& a, const OmegaPolynomial& b);
    OmegaPolynomial operator-() const;

    bool operator==(const OmegaPolynomial&) const = default;

private:
    Terms terms_;
};

std::string to_string(const OmegaPolynomial& p);

// Upper unitriangular k x k matrix over Omega_k; only the strict upper
// triangle is stored.
class UnitriangularMatrix {
public:
    explicit UnitriangularMatrix(int size);
    static UnitriangularMatrix identity(int size) { return UnitriangularMatrix(size); }

    int size() const { return size_; }
    // 0-based row < column.
    const OmegaPolynomial& entry(int row, int column) const;
    OmegaPolynomial& entry(int row, int column);
    bool is_identity() const;

    friend UnitriangularMatrix operator*(const UnitriangularMatrix& a, const UnitriangularMatrix& b);
    UnitriangularMatrix inverse() const;

    bool operator==(const UnitriangularMatrix&) const = default;

private:
    std::size_t slot(int row, int column) const;

    int size_;
    std::vector<OmegaPolynomial> upper_;
};

std::string to_string(const UnitriangularMatrix& m);

// Upsilon_k(x_j): identity plus lambda_i^(j) on the superdiagonal.
UnitriangularMatrix upsilon_generator(int generator, int k);
UnitriangularMatrix upsilon(const Word& w, int k);

}  // namespace nilcoh

#endif  // NILCOH_UPSILON_HPP
