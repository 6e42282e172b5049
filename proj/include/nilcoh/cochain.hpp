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
// Non-homogeneous cochains on F/F_k as evaluable expression trees, with the
// coboundary, cup product, defining systems and Massey 2-cocycles.

#ifndef NILCOH_COCHAIN_HPP
#define NILCOH_COCHAIN_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilcoh/basic.hpp"
#include "nilcoh/magnus.hpp"
#include "nilcoh/words.hpp"

namespace nilcoh {

// An element of F/F_level with a word representative and its cached Magnus
// normal form modulo J_level.
class NilpotentElement {
public:
    NilpotentElement(Word representative, int level);
    static NilpotentElement identity(int level) { return NilpotentElement(Word(), level); }

    int level() const { return level_; }
    const Word& representative() const { return representative_; }
    const TruncatedPolynomial& normal_form() const { return normal_form_; }

    // c_I of the element; c_() = 1. Requires |I| < level.
    Integer c(std::span<const int> index) const;

    NilpotentElement inverse() const;
    friend NilpotentElement operator*(const NilpotentElement& a, const NilpotentElement& b);

    // Equality in F/F_level.
    bool operator==(const NilpotentElement& other) const {
        return level_ == other.level_ && normal_form_ == other.normal_form_;
    }

private:
    NilpotentElement(Word representative, TruncatedPolynomial normal_form, int level);

    int level_;
    Word representative_;
    TruncatedPolynomial normal_form_;
};

using Element = NilpotentElement;

// A degree-n cochain F/F_k^n -> Z. Cheap to copy; subtrees are shared.
class Cochain {
public:
    struct Node;

    static Cochain constant(int degree, const Integer& value);
    static Cochain zero(int degree) { return constant(degree, 0); }
    // g -> c_I(g_slot) as a degree-`degree` cochain (slot is 0-based).
    static Cochain coefficient(int degree, int slot, Sequence index);
    // The abelianization class alpha_t = c_t.
    static Cochain alpha(int t) { return coefficient(1, 0, {t}); }

    int degree() const;
    // True only for structural zeros (constant 0, or sums/cups built from them).
    bool is_zero() const;

    Integer evaluate(std::span<const Element> args) const;
    Integer operator()(std::span<const Element> args) const { return evaluate(args); }
    Integer operator()(std::initializer_list<Element> args) const {
        return evaluate(std::span<const Element>(args.begin(), args.size()));
    }

    // Readable formula, e.g. "c_1(x1)*c_2(x2)".
    std::string describe() const;

    friend Cochain operator+(const Cochain& a, const Cochain& b);
    friend Cochain operator-(const Cochain& a, const Cochain& b);
    friend Cochain operator*(const Integer& scalar, const Cochain& a);
    Cochain operator-() const;

    // Pointwise product of cochains of equal degree.
    friend Cochain pointwise(const Cochain& a, const Cochain& b);
    friend Cochain cup(const Cochain& u, const Cochain& v);
    friend Cochain coboundary(const Cochain& f);

private:
    explicit Cochain(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// (u cup v)(g_1..g_{p+q}) = (-1)^{pq} u(g_1..g_p) v(g_{p+1}..g_{p+q}).
Cochain cup(const Cochain& u, const Cochain& v);

// (df)(g_1..g_{n+1}) = f(g_2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..)
//                       + (-1)^{n+1} f(g_1..g_n).
Cochain coboundary(const Cochain& f);

Cochain pointwise(const Cochain& a, const Cochain& b);

// Product c_{I_1}(g_{s_1}) c_{I_2}(g_{s_2}) ... as one degree-n cochain.
Cochain coefficient_product(int degree, const std::vector<std::pair<int, Sequence>>& factors);

// How condition (iii) of a defining system is signed.
//  kPlus:  a_{s,t} = c_{i_s..i_t}; d a_{s,t} = + sum a_{s,r} cup a_{r+1,t}.
//  kMinus: d a_{s,t} = - sum a_{s,r} cup a_{r+1,t}; this forces
//          a_{s,t} = (-1)^{t-s} c_{i_s..i_t}.
// In both cases the Massey sum is assembled with the sign -1.
enum class SignConvention { kPlus, kMinus };

using DefiningSystem = std::map<std::pair<int, int>, Cochain>;

// Grid a_{s,t}, 1 <= s <= t <= k, (s,t) != (1,k), of degree-1 cochains.
DefiningSystem defining_system(std::span<const int> index,
                               SignConvention convention = SignConvention::kPlus);

// The two sides of condition (iii) for entry (s,t): d a_{s,t} and the signed
// cup sum.
std::pair<Cochain, Cochain> defining_system_condition(const DefiningSystem& grid,
                                                      std::span<const int> index, int s, int t,
                                                      SignConvention convention = SignConvention::kPlus);

// The Massey 2-cocycle assembled from a defining system.
Cochain massey_from_defining_system(const DefiningSystem& grid, int k);

// (x,y) -> sum_{l=1}^{k-1} c_{i_1..i_l}(x) c_{i_{l+1}..i_k}(y).
Cochain massey2(std::span<const int> index);

}  // namespace nilcoh

#endif  // NILCOH_COCHAIN_HPP
