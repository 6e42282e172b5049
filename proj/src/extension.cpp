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

#include "nilcoh/extension.hpp"

#include <fmt/format.h>

namespace nilcoh {

CentralExtension::CentralExtension(int q, int k) : q_(q), k_(k), basis_(standard_sequences(q, k)) {
    if (k < 2) throw PreconditionError("the central extension needs k >= 2");
    for (const Sequence& index : basis_) cocycles_.push_back(massey2(index));
}

ExtensionElement CentralExtension::identity() const {
    return ExtensionElement{NilpotentElement::identity(k_), IntegerVector(basis_.size())};
}

ExtensionElement CentralExtension::lift_generator(int generator) const {
    if (generator < 1 || generator > q_) throw PreconditionError("generator out of range");
    return ExtensionElement{NilpotentElement(Word::generator(generator), k_), IntegerVector(basis_.size())};
}

IntegerVector CentralExtension::cocycle(const NilpotentElement& g, const NilpotentElement& h) const {
    IntegerVector out;
    out.reserve(cocycles_.size());
    for (const Cochain& f : cocycles_) out.push_back(f({g, h}));
    return out;
}

ExtensionElement CentralExtension::multiply(const ExtensionElement& a, const ExtensionElement& b) const {
    if (a.base.level() != k_ || b.base.level() != k_) throw PreconditionError("extension level mismatch");
    IntegerVector fiber = cocycle(a.base, b.base);
    for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] += a.fiber[i] + b.fiber[i];
    return ExtensionElement{a.base * b.base, std::move(fiber)};
}

ExtensionElement CentralExtension::inverse(const ExtensionElement& a) const {
    NilpotentElement inv = a.base.inverse();
    IntegerVector fiber = cocycle(a.base, inv);
    for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] = -fiber[i] - a.fiber[i];
    return ExtensionElement{std::move(inv), std::move(fiber)};
}

ExtensionElement CentralExtension::evaluate(const Word& w) const {
    ExtensionElement acc = identity();
    for (const Letter& l : w.letters()) {
        ExtensionElement lift = lift_generator(l.generator);
        acc = multiply(acc, l.sign > 0 ? lift : inverse(lift));
    }
    return acc;
}

ExtensionEvaluation evaluate_word_in_extension(const Word& w, int q, int k) {
    CentralExtension extension(q, k);
    ExtensionElement element = extension.evaluate(w);
    const bool cycle = element.base.normal_form().is_one();
    return ExtensionEvaluation{std::move(element), cycle};
}

Integer pairing(std::span<const int> index, const Word& w) {
    const int k = static_cast<int>(index.size());
    if (k < 1) throw PreconditionError("pairing needs a non-empty index");
    if (!in_Fk(w, k)) throw PreconditionError(fmt::format("pairing needs w in F_{}", k));
    return magnus_coefficient(index, w, k + 1);
}

IntegerVector s_map(const Word& w, int q, int k) {
    if (!in_Fk(w, k)) throw PreconditionError(fmt::format("s_map needs w in F_{}", k));
    const TruncatedPolynomial p = magnus_expand(w, k + 1);
    IntegerVector out;
    for (const Sequence& index : standard_sequences(q, k)) out.push_back(p.coefficient(index));
    return out;
}

}  // namespace nilcoh
