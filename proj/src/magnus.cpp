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

#include "nilcoh/magnus.hpp"

#include <set>

#include <fmt/format.h>

namespace nilcoh {

TruncatedPolynomial::TruncatedPolynomial(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 1) throw PreconditionError("degree bound must be >= 1");
}

TruncatedPolynomial TruncatedPolynomial::one(int degree_bound) {
    TruncatedPolynomial p(degree_bound);
    p.terms_.emplace(Sequence{}, Integer(1));
    return p;
}

Integer TruncatedPolynomial::coefficient(std::span<const int> index) const {
    const Integer* v = find(index);
    return v ? *v : Integer(0);
}

const Integer* TruncatedPolynomial::find(std::span<const int> index) const {
    if (static_cast<int>(index.size()) >= degree_bound_) {
        throw PreconditionError(fmt::format("coefficient of a length-{} monomial is undefined below degree {}",
                                            index.size(), degree_bound_));
    }
    auto it = terms_.find(Sequence(index.begin(), index.end()));
    return it == terms_.end() ? nullptr : &it->second;
}

void TruncatedPolynomial::add_term(const Sequence& index, const Integer& value) {
    if (static_cast<int>(index.size()) >= degree_bound_ || value == 0) return;
    auto [it, inserted] = terms_.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

bool TruncatedPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

TruncatedPolynomial TruncatedPolynomial::truncated(int new_bound) const {
    TruncatedPolynomial out(new_bound);
    for (const auto& [index, value] : terms_) {
        if (static_cast<int>(index.size()) < new_bound) out.terms_.emplace(index, value);
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::homogeneous_part(int degree) const {
    TruncatedPolynomial out(degree_bound_);
    for (const auto& [index, value] : terms_) {
        if (static_cast<int>(index.size()) == degree) out.terms_.emplace(index, value);
    }
    return out;
}

int TruncatedPolynomial::lowest_nonconstant_degree() const {
    for (const auto& [index, value] : terms_) {
        if (!index.empty()) return static_cast<int>(index.size());
    }
    return degree_bound_;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
    for (const auto& [index, value] : other.terms_) add_term(index, value);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
    for (const auto& [index, value] : other.terms_) add_term(index, -value);
    return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    const int bound = std::min(a.degree_bound_, b.degree_bound_);
    TruncatedPolynomial out(bound);
    for (const auto& [ia, va] : a.terms_) {
        if (static_cast<int>(ia.size()) >= bound) continue;
        for (const auto& [ib, vb] : b.terms_) {
            if (static_cast<int>(ia.size() + ib.size()) >= bound) break;  // short-lex: lengths only grow
            out.add_term(concat(ia, ib), va * vb);
        }
    }
    return out;
}

void TruncatedPolynomial::multiply_by_letter(Letter letter) {
    Terms next;
    auto add = [&next](Sequence index, const Integer& value) {
        auto [it, inserted] = next.emplace(std::move(index), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) next.erase(it);
        }
    };
    for (const auto& [index, value] : terms_) {
        add(index, value);
        Sequence grown = index;
        // (1 + X)^{-1} = 1 - X + X^2 - ...; a positive letter stops after one step.
        for (int j = 1; static_cast<int>(index.size()) + j < degree_bound_; ++j) {
            grown.push_back(letter.generator);
            add(grown, (letter.sign < 0 && j % 2 == 1) ? Integer(-value) : value);
            if (letter.sign > 0) break;
        }
    }
    terms_ = std::move(next);
}

std::string to_string(const TruncatedPolynomial& p) {
    if (p.terms().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [index, value] : p.terms()) {
        Integer magnitude = value < 0 ? Integer(-value) : value;
        if (first) {
            if (value < 0) out += "-";
        } else {
            out += value < 0 ? " - " : " + ";
        }
        first = false;
        std::string monomial;
        for (int i : index) monomial += fmt::format("X{}", i);
        if (monomial.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str();
            out += monomial;
        }
    }
    return out;
}

TruncatedPolynomial magnus_expand(const Word& w, int degree_bound) {
    TruncatedPolynomial p = TruncatedPolynomial::one(degree_bound);
    for (const Letter& l : w.letters()) p.multiply_by_letter(l);
    return p;
}

Integer coefficient(const TruncatedPolynomial& p, std::span<const int> index) {
    return p.coefficient(index);
}

Integer magnus_coefficient(std::span<const int> index, const Word& w, int degree_bound) {
    if (static_cast<int>(index.size()) >= degree_bound) {
        throw PreconditionError("c_I requires |I| < degree bound");
    }
    return magnus_expand(w, degree_bound).coefficient(index);
}

bool equal_mod_Fk(const Word& u, const Word& v, int k) {
    return magnus_expand(u, k) == magnus_expand(v, k);
}

bool in_Fk(const Word& w, int k) { return magnus_expand(w, k).is_one(); }

namespace {

void shuffle_into(std::span<const int> a, std::span<const int> b, Sequence& current, ShuffleSet& out) {
    if (a.empty() && b.empty()) {
        ++out[current];
        return;
    }
    if (!a.empty()) {
        current.push_back(a[0]);
        shuffle_into(a.subspan(1), b, current, out);
        current.pop_back();
    }
    if (!b.empty()) {
        current.push_back(b[0]);
        shuffle_into(a, b.subspan(1), current, out);
        current.pop_back();
    }
    if (!a.empty() && !b.empty() && a[0] == b[0]) {
        current.push_back(a[0]);
        shuffle_into(a.subspan(1), b.subspan(1), current, out);
        current.pop_back();
    }
}

// Calls f on every non-empty sequence over `letters` of length <= max_length.
template <typename F>
void for_each_sequence(const std::vector<int>& letters, int max_length, Sequence& current, F&& f) {
    if (!current.empty()) f(current);
    if (static_cast<int>(current.size()) == max_length) return;
    for (int l : letters) {
        current.push_back(l);
        for_each_sequence(letters, max_length, current, f);
        current.pop_back();
    }
}

}  // namespace

ShuffleSet shuffles(std::span<const int> first, std::span<const int> second) {
    if (first.empty() || second.empty()) throw PreconditionError("shuffles need non-empty sequences");
    ShuffleSet out;
    Sequence current;
    shuffle_into(first, second, current, out);
    return out;
}

bool satisfies_shuffle_relations(const TruncatedPolynomial& p) {
    if (p.coefficient(Sequence{}) != 1) {
        throw PreconditionError("shuffle relations are stated for polynomials with constant term 1");
    }
    std::set<int> present;
    for (const auto& [index, value] : p.terms()) present.insert(index.begin(), index.end());
    const std::vector<int> letters(present.begin(), present.end());
    const int max_total = p.degree_bound() - 1;
    if (letters.empty() || max_total < 2) return true;

    bool ok = true;
    Sequence j_buffer;
    for_each_sequence(letters, max_total - 1, j_buffer, [&](const Sequence& j) {
        if (!ok) return;
        const Integer aj = p.coefficient(j);
        Sequence k_buffer;
        for_each_sequence(letters, max_total - static_cast<int>(j.size()), k_buffer, [&](const Sequence& k) {
            if (!ok) return;
            Integer rhs = 0;
            for (const auto& [l, mult] : shuffles(j, k)) rhs += p.coefficient(l) * mult;
            if (aj * p.coefficient(k) != rhs) ok = false;
        });
    });
    return ok;
}

}  // namespace nilcoh
