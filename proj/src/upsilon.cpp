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

#include "nilcoh/upsilon.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace nilcoh {

OmegaPolynomial OmegaPolynomial::constant(const Integer& value) {
    OmegaPolynomial p;
    p.add_term({}, value);
    return p;
}

OmegaPolynomial OmegaPolynomial::variable(Lambda lambda) {
    OmegaPolynomial p;
    p.add_term({lambda}, 1);
    return p;
}

Integer OmegaPolynomial::coefficient(Monomial monomial) const {
    std::sort(monomial.begin(), monomial.end());
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

void OmegaPolynomial::add_term(Monomial monomial, const Integer& value) {
    if (value == 0) return;
    std::sort(monomial.begin(), monomial.end());
    auto [it, inserted] = terms_.emplace(std::move(monomial), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

OmegaPolynomial& OmegaPolynomial::operator+=(const OmegaPolynomial& other) {
    for (const auto& [m, v] : other.terms_) add_term(m, v);
    return *this;
}

OmegaPolynomial& OmegaPolynomial::operator-=(const OmegaPolynomial& other) {
    for (const auto& [m, v] : other.terms_) add_term(m, -v);
    return *this;
}

OmegaPolynomial operator*(const OmegaPolynomial& a, const OmegaPolynomial& b) {
    OmegaPolynomial out;
    for (const auto& [ma, va] : a.terms_) {
        for (const auto& [mb, vb] : b.terms_) {
            OmegaPolynomial::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), va * vb);
        }
    }
    return out;
}

OmegaPolynomial OmegaPolynomial::operator-() const {
    OmegaPolynomial out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, -v);
    return out;
}

std::string to_string(const OmegaPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, v] : p.terms()) {
        const Integer magnitude = v < 0 ? Integer(-v) : v;
        out += first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            std::string f = fmt::format("l{}_{}", m[i].row, m[i].generator);
            if (j - i > 1) f += fmt::format("^{}", j - i);
            factors.push_back(std::move(f));
            i = j;
        }
        if (factors.empty()) {
            out += magnitude.str();
        } else {
            if (magnitude != 1) out += magnitude.str() + "*";
            out += fmt::format("{}", fmt::join(factors, "*"));
        }
    }
    return out;
}

UnitriangularMatrix::UnitriangularMatrix(int size) : size_(size) {
    if (size < 1) throw PreconditionError("matrix size must be >= 1");
    upper_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size - 1) / 2);
}

std::size_t UnitriangularMatrix::slot(int row, int column) const {
    if (row < 0 || column >= size_ || row >= column) {
        throw PreconditionError("only strict upper-triangular entries are stored");
    }
    // Row-major over the strict upper triangle.
    const auto r = static_cast<std::size_t>(row);
    const auto n = static_cast<std::size_t>(size_);
    return r * (2 * n - r - 1) / 2 + static_cast<std::size_t>(column - row - 1);
}

const OmegaPolynomial& UnitriangularMatrix::entry(int row, int column) const {
    return upper_[slot(row, column)];
}

OmegaPolynomial& UnitriangularMatrix::entry(int row, int column) { return upper_[slot(row, column)]; }

bool UnitriangularMatrix::is_identity() const {
    return std::all_of(upper_.begin(), upper_.end(), [](const OmegaPolynomial& p) { return p.is_zero(); });
}

UnitriangularMatrix operator*(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
    if (a.size_ != b.size_) throw PreconditionError("matrix size mismatch");
    UnitriangularMatrix out(a.size_);
    for (int r = 0; r < a.size_; ++r) {
        for (int c = r + 1; c < a.size_; ++c) {
            OmegaPolynomial sum = a.entry(r, c) + b.entry(r, c);
            for (int m = r + 1; m < c; ++m) sum += a.entry(r, m) * b.entry(m, c);
            out.entry(r, c) = std::move(sum);
        }
    }
    return out;
}

UnitriangularMatrix UnitriangularMatrix::inverse() const {
    // (1 + N)^{-1} = sum_m (-N)^m, finite since N is nilpotent.
    UnitriangularMatrix minus_n(size_);
    for (std::size_t i = 0; i < upper_.size(); ++i) minus_n.upper_[i] = -upper_[i];
    UnitriangularMatrix out = minus_n;
    UnitriangularMatrix power = minus_n;
    for (int m = 2; m < size_; ++m) {
        // power holds (-N)^{m-1}; strictly upper products drop the identity part.
        UnitriangularMatrix next(size_);
        for (int r = 0; r < size_; ++r) {
            for (int c = r + 1; c < size_; ++c) {
                OmegaPolynomial sum;
                for (int k = r + 1; k < c; ++k) sum += power.entry(r, k) * minus_n.entry(k, c);
                next.entry(r, c) = std::move(sum);
            }
        }
        power = next;
        for (std::size_t i = 0; i < upper_.size(); ++i) out.upper_[i] += power.upper_[i];
    }
    return out;
}

std::string to_string(const UnitriangularMatrix& m) {
    std::string out;
    for (int r = 0; r < m.size(); ++r) {
        std::vector<std::string> row;
        for (int c = 0; c < m.size(); ++c) {
            if (c < r) {
                row.emplace_back("0");
            } else if (c == r) {
                row.emplace_back("1");
            } else {
                row.push_back(to_string(m.entry(r, c)));
            }
        }
        out += fmt::format("[{}]\n", fmt::join(row, ", "));
    }
    return out;
}

UnitriangularMatrix upsilon_generator(int generator, int k) {
    if (k < 2) throw PreconditionError("upsilon requires k >= 2");
    UnitriangularMatrix m(k);
    for (int i = 0; i + 1 < k; ++i) m.entry(i, i + 1) = OmegaPolynomial::variable(Lambda{i + 1, generator});
    return m;
}

UnitriangularMatrix upsilon(const Word& w, int k) {
    if (k < 2) throw PreconditionError("upsilon requires k >= 2");
    UnitriangularMatrix out = UnitriangularMatrix::identity(k);
    std::map<std::pair<int, int>, UnitriangularMatrix> cache;
    for (const Letter& l : w.letters()) {
        auto key = std::make_pair(l.generator, l.sign);
        auto it = cache.find(key);
        if (it == cache.end()) {
            UnitriangularMatrix g = upsilon_generator(l.generator, k);
            it = cache.emplace(key, l.sign > 0 ? g : g.inverse()).first;
        }
        out = out * it->second;
    }
    return out;
}

}  // namespace nilcoh
