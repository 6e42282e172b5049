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

#include "nilcoh/topology.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace nilcoh {

const Word& LongitudeSystem::longitude(int component) const {
    auto it = longitudes.find(component);
    if (it == longitudes.end()) throw PreconditionError(fmt::format("no longitude for component {}", component));
    return it->second;
}

std::map<int, bool> check_assumption(const LongitudeSystem& ls, int k) {
    std::map<int, bool> out;
    for (const auto& [component, w] : ls.longitudes) out.emplace(component, in_Fk(w, k));
    return out;
}

Integer milnor_mu(const LongitudeSystem& ls, std::span<const int> index, int component) {
    const int k = static_cast<int>(index.size());
    if (k < 1) throw PreconditionError("mu needs a non-empty index");
    const Word& w = ls.longitude(component);
    if (!in_Fk(w, k)) {
        throw PreconditionError(fmt::format("assumption A_{} fails for component {}", k, component));
    }
    return magnus_coefficient(index, w, k + 1);
}

std::pair<Integer, Integer> mu_pairing_crosscheck(const LongitudeSystem& ls, std::span<const int> index,
                                                  int component) {
    if (!index.empty() && index.front() == component) {
        throw PreconditionError("the crosscheck needs i_1 different from the component");
    }
    const Integer mu = milnor_mu(ls, index, component);
    const int k = static_cast<int>(index.size());
    const Word relator = commutator(ls.longitude(component), Word::generator(component));
    Sequence extended(index.begin(), index.end());
    extended.push_back(component);
    return {mu, magnus_coefficient(extended, relator, k + 2)};
}

FreeEndomorphism::FreeEndomorphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw PreconditionError("an endomorphism needs at least one generator");
}

FreeEndomorphism FreeEndomorphism::identity(int q) {
    std::vector<Word> images;
    for (int i = 1; i <= q; ++i) images.push_back(Word::generator(i));
    return FreeEndomorphism(std::move(images));
}

const Word& FreeEndomorphism::image(int generator) const {
    if (generator < 1 || generator > rank()) throw PreconditionError("generator out of range");
    return images_[static_cast<std::size_t>(generator - 1)];
}

Word FreeEndomorphism::apply(const Word& w) const {
    Word out;
    for (const Letter& l : w.letters()) {
        const Word& img = image(l.generator);
        out *= l.sign > 0 ? img : img.inverse();
    }
    return normalize(out);
}

FreeEndomorphism compose(const FreeEndomorphism& f, const FreeEndomorphism& g) {
    std::vector<Word> images;
    for (const Word& w : g.images()) images.push_back(f.apply(w));
    return FreeEndomorphism(std::move(images));
}

namespace {

Word drift(const FreeEndomorphism& f, int i) {
    return normalize(f.image(i) * Word::generator(i, -1));
}

}  // namespace

int torelli_depth(const FreeEndomorphism& f, int max_k) {
    if (max_k < 1) throw PreconditionError("max_k must be >= 1");
    int depth = max_k;
    for (int i = 1; i <= f.rank(); ++i) {
        depth = std::min(depth, magnus_expand(drift(f, i), max_k).lowest_nonconstant_degree());
    }
    return std::max(depth, 1);
}

bool JohnsonValue::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const TruncatedPolynomial& p) { return p.terms().empty(); });
}

JohnsonValue johnson_tau(const FreeEndomorphism& f, int k) {
    if (k < 1) throw PreconditionError("johnson_tau needs k >= 1");
    if (torelli_depth(f, k) < k) throw PreconditionError(fmt::format("endomorphism is not in T({})", k));
    JohnsonValue out{k, {}};
    for (int i = 1; i <= f.rank(); ++i) {
        out.components.push_back(magnus_expand(drift(f, i), k + 1).homogeneous_part(k));
    }
    return out;
}

JohnsonValue operator+(const JohnsonValue& a, const JohnsonValue& b) {
    if (a.k != b.k || a.components.size() != b.components.size()) {
        throw PreconditionError("adding Johnson values of different shapes");
    }
    JohnsonValue out = a;
    for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
    return out;
}

bool morita_vanishes(const FreeEndomorphism& f, int k) {
    if (k < 2) throw PreconditionError("morita_vanishes needs k >= 2");
    if (torelli_depth(f, k) < k) throw PreconditionError(fmt::format("endomorphism is not in T({})", k));
    return torelli_depth(f, 2 * k - 1) >= 2 * k - 1;
}

}  // namespace nilcoh
