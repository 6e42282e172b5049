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

#include "nilcoh/lattice.hpp"

#include <utility>

namespace nilcoh {

namespace {

bool is_zero_vector(const IntegerVector& v) {
    for (const Integer& x : v) {
        if (x != 0) return false;
    }
    return true;
}

// Floor division for the reduction step above pivots.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntegerLattice::IntegerLattice(std::size_t dimension, const std::vector<IntegerVector>& generators)
    : dimension_(dimension) {
    for (const IntegerVector& g : generators) {
        if (g.size() != dimension) throw PreconditionError("lattice generator has the wrong dimension");
    }
    rebuild(generators);
}

void IntegerLattice::add_generator(IntegerVector v) {
    if (v.size() != dimension_) throw PreconditionError("lattice generator has the wrong dimension");
    std::vector<IntegerVector> rows = basis_;
    rows.push_back(std::move(v));
    rebuild(std::move(rows));
}

void IntegerLattice::rebuild(std::vector<IntegerVector> rows) {
    std::vector<IntegerVector> echelon;
    for (std::size_t col = 0; col < dimension_ && !rows.empty(); ++col) {
        // Euclid on column `col` across the remaining rows.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            bool done = true;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == best || rows[r][col] == 0) continue;
                const Integer factor = rows[r][col] / rows[best][col];
                for (std::size_t c = col; c < dimension_; ++c) rows[r][c] -= factor * rows[best][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) {
                IntegerVector pivot = std::move(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                if (pivot[col] < 0) {
                    for (Integer& x : pivot) x = -x;
                }
                echelon.push_back(std::move(pivot));
                break;
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_vector), rows.end());
    }
    // Reduce the entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < echelon.size(); ++i) {
        std::size_t col = 0;
        while (echelon[i][col] == 0) ++col;
        for (std::size_t j = 0; j < i; ++j) {
            const Integer factor = floor_div(echelon[j][col], echelon[i][col]);
            if (factor == 0) continue;
            for (std::size_t c = col; c < dimension_; ++c) echelon[j][c] -= factor * echelon[i][c];
        }
    }
    basis_ = std::move(echelon);
}

bool IntegerLattice::contains(IntegerVector v) const {
    if (v.size() != dimension_) throw PreconditionError("vector has the wrong dimension");
    for (const IntegerVector& row : basis_) {
        std::size_t col = 0;
        while (row[col] == 0) ++col;
        for (std::size_t c = 0; c < col; ++c) {
            if (v[c] != 0) return false;
        }
        if (v[col] % row[col] != 0) return false;
        const Integer factor = v[col] / row[col];
        for (std::size_t c = col; c < dimension_; ++c) v[c] -= factor * row[c];
    }
    return is_zero_vector(v);
}

}  // namespace nilcoh
