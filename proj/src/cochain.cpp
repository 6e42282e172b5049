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

#include "nilcoh/cochain.hpp"

#include <variant>

#include <fmt/format.h>

namespace nilcoh {

// --- NilpotentElement -------------------------------------------------------

NilpotentElement::NilpotentElement(Word representative, int level)
    : level_(level),
      representative_(normalize(representative)),
      normal_form_(magnus_expand(representative_, level)) {}

NilpotentElement::NilpotentElement(Word representative, TruncatedPolynomial normal_form, int level)
    : level_(level), representative_(std::move(representative)), normal_form_(std::move(normal_form)) {}

Integer NilpotentElement::c(std::span<const int> index) const {
    if (static_cast<int>(index.size()) >= level_) {
        throw PreconditionError(fmt::format("c_{} is not defined on F/F_{}", sequence_to_string(index), level_));
    }
    return normal_form_.coefficient(index);
}

NilpotentElement NilpotentElement::inverse() const { return NilpotentElement(representative_.inverse(), level_); }

NilpotentElement operator*(const NilpotentElement& a, const NilpotentElement& b) {
    if (a.level_ != b.level_) throw PreconditionError("multiplying elements of different levels");
    return NilpotentElement(normalize(a.representative_ * b.representative_), a.normal_form_ * b.normal_form_,
                            a.level_);
}

// --- expression tree --------------------------------------------------------

namespace {

struct ConstantNode {
    Integer value;
};
struct CoefficientNode {
    int slot;
    Sequence index;
};
struct LinearNode {
    std::vector<std::pair<Integer, Cochain>> terms;
};
struct ProductNode {
    Cochain left;
    Cochain right;
};
struct CupNode {
    Cochain left;
    Cochain right;
};
struct CoboundaryNode {
    Cochain inner;
};

std::string slot_name(int slot) { return fmt::format("g{}", slot + 1); }

}  // namespace

struct Cochain::Node {
    int degree;
    std::variant<ConstantNode, CoefficientNode, LinearNode, ProductNode, CupNode, CoboundaryNode> body;
};

Cochain Cochain::constant(int degree, const Integer& value) {
    if (degree < 0) throw PreconditionError("cochain degree must be >= 0");
    return Cochain(std::make_shared<const Node>(Node{degree, ConstantNode{value}}));
}

Cochain Cochain::coefficient(int degree, int slot, Sequence index) {
    if (slot < 0 || slot >= degree) throw PreconditionError("coefficient slot out of range");
    return Cochain(std::make_shared<const Node>(Node{degree, CoefficientNode{slot, std::move(index)}}));
}

int Cochain::degree() const { return node_->degree; }

bool Cochain::is_zero() const {
    if (const auto* c = std::get_if<ConstantNode>(&node_->body)) return c->value == 0;
    return false;
}

Integer Cochain::evaluate(std::span<const Element> args) const {
    if (static_cast<int>(args.size()) != node_->degree) {
        throw PreconditionError(fmt::format("degree-{} cochain evaluated on {} arguments", node_->degree, args.size()));
    }
    return std::visit(
        [&](const auto& body) -> Integer {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return body.value;
            } else if constexpr (std::is_same_v<T, CoefficientNode>) {
                return args[static_cast<std::size_t>(body.slot)].c(body.index);
            } else if constexpr (std::is_same_v<T, LinearNode>) {
                Integer sum = 0;
                for (const auto& [scalar, term] : body.terms) sum += scalar * term.evaluate(args);
                return sum;
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                Integer left = body.left.evaluate(args);
                return left == 0 ? Integer(0) : left * body.right.evaluate(args);
            } else if constexpr (std::is_same_v<T, CupNode>) {
                const auto p = static_cast<std::size_t>(body.left.degree());
                Integer left = body.left.evaluate(args.first(p));
                if (left == 0) return 0;
                Integer value = left * body.right.evaluate(args.subspan(p));
                return (p * static_cast<std::size_t>(body.right.degree())) % 2 == 0 ? value : Integer(-value);
            } else {
                const std::size_t n = args.size();  // degree of the coboundary
                std::vector<Element> buffer(args.begin() + 1, args.end());
                Integer sum = body.inner.evaluate(buffer);
                for (std::size_t i = 1; i < n; ++i) {
                    buffer.clear();
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j + 1 == i) {
                            buffer.push_back(args[j] * args[j + 1]);
                            ++j;
                        } else {
                            buffer.push_back(args[j]);
                        }
                    }
                    Integer v = body.inner.evaluate(buffer);
                    sum += i % 2 == 0 ? v : Integer(-v);
                }
                Integer last = body.inner.evaluate(args.first(n - 1));
                sum += n % 2 == 0 ? last : Integer(-last);
                return sum;
            }
        },
        node_->body);
}

std::string Cochain::describe() const {
    return std::visit(
        [&](const auto& body) -> std::string {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return body.value.str();
            } else if constexpr (std::is_same_v<T, CoefficientNode>) {
                return fmt::format("c_{}({})", sequence_to_string(body.index), slot_name(body.slot));
            } else if constexpr (std::is_same_v<T, LinearNode>) {
                std::string out;
                for (const auto& [scalar, term] : body.terms) {
                    if (!out.empty()) out += scalar < 0 ? " - " : " + ";
                    else if (scalar < 0) out += "-";
                    Integer magnitude = scalar < 0 ? Integer(-scalar) : scalar;
                    if (magnitude != 1) out += magnitude.str() + "*";
                    out += "(" + term.describe() + ")";
                }
                return out.empty() ? "0" : out;
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return body.left.describe() + "*" + body.right.describe();
            } else if constexpr (std::is_same_v<T, CupNode>) {
                return "(" + body.left.describe() + ") cup (" + body.right.describe() + ")";
            } else {
                return "d(" + body.inner.describe() + ")";
            }
        },
        node_->body);
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree()) throw PreconditionError("adding cochains of different degrees");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LinearNode node;
    // Flatten nested sums so long sums stay shallow.
    for (const Cochain* part : {&a, &b}) {
        if (const auto* lin = std::get_if<LinearNode>(&part->node_->body)) {
            node.terms.insert(node.terms.end(), lin->terms.begin(), lin->terms.end());
        } else {
            node.terms.emplace_back(1, *part);
        }
    }
    return Cochain(std::make_shared<const Cochain::Node>(Cochain::Node{a.degree(), std::move(node)}));
}

Cochain operator*(const Integer& scalar, const Cochain& a) {
    if (scalar == 0 || a.is_zero()) return Cochain::zero(a.degree());
    if (scalar == 1) return a;
    LinearNode node;
    node.terms.emplace_back(scalar, a);
    return Cochain(std::make_shared<const Cochain::Node>(Cochain::Node{a.degree(), std::move(node)}));
}

Cochain Cochain::operator-() const { return Integer(-1) * *this; }

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

Cochain pointwise(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree()) throw PreconditionError("pointwise product of cochains of different degrees");
    if (a.is_zero() || b.is_zero()) return Cochain::zero(a.degree());
    return Cochain(std::make_shared<const Cochain::Node>(Cochain::Node{a.degree(), ProductNode{a, b}}));
}

Cochain cup(const Cochain& u, const Cochain& v) {
    const int degree = u.degree() + v.degree();
    if (u.is_zero() || v.is_zero()) return Cochain::zero(degree);
    return Cochain(std::make_shared<const Cochain::Node>(Cochain::Node{degree, CupNode{u, v}}));
}

Cochain coboundary(const Cochain& f) {
    const int degree = f.degree() + 1;
    if (f.is_zero()) return Cochain::zero(degree);
    return Cochain(std::make_shared<const Cochain::Node>(Cochain::Node{degree, CoboundaryNode{f}}));
}

Cochain coefficient_product(int degree, const std::vector<std::pair<int, Sequence>>& factors) {
    if (factors.empty()) return Cochain::constant(degree, 1);
    Cochain out = Cochain::coefficient(degree, factors.front().first, factors.front().second);
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = pointwise(out, Cochain::coefficient(degree, factors[i].first, factors[i].second));
    }
    return out;
}

// --- defining systems -------------------------------------------------------

DefiningSystem defining_system(std::span<const int> index, SignConvention convention) {
    const int k = static_cast<int>(index.size());
    if (k < 2) throw PreconditionError("a defining system needs |I| >= 2");
    DefiningSystem grid;
    for (int s = 1; s <= k; ++s) {
        for (int t = s; t <= k; ++t) {
            if (s == 1 && t == k) continue;
            Cochain a = Cochain::coefficient(1, 0, subsequence(index, s - 1, t));
            if (convention == SignConvention::kMinus && (t - s) % 2 == 1) a = -a;
            grid.emplace(std::make_pair(s, t), a);
        }
    }
    return grid;
}

std::pair<Cochain, Cochain> defining_system_condition(const DefiningSystem& grid, std::span<const int> index,
                                                      int s, int t, SignConvention convention) {
    const int k = static_cast<int>(index.size());
    if (s < 1 || t > k || s > t || (s == 1 && t == k)) throw PreconditionError("no such defining-system entry");
    const Integer sign = convention == SignConvention::kPlus ? 1 : -1;
    Cochain rhs = Cochain::zero(2);
    for (int r = s; r < t; ++r) rhs = rhs + sign * cup(grid.at({s, r}), grid.at({r + 1, t}));
    return {coboundary(grid.at({s, t})), rhs};
}

Cochain massey_from_defining_system(const DefiningSystem& grid, int k) {
    Cochain sum = Cochain::zero(2);
    // The sign exponent p_1 + ... + p_r - r + 1 is 1 for degree-one classes.
    for (int r = 1; r < k; ++r) sum = sum - cup(grid.at({1, r}), grid.at({r + 1, k}));
    return sum;
}

Cochain massey2(std::span<const int> index) {
    const int k = static_cast<int>(index.size());
    if (k < 2) throw PreconditionError("massey2 needs |I| >= 2");
    Cochain sum = Cochain::zero(2);
    for (int l = 1; l < k; ++l) {
        sum = sum + coefficient_product(2, {{0, subsequence(index, 0, l)}, {1, subsequence(index, l, k)}});
    }
    return sum;
}

}  // namespace nilcoh
