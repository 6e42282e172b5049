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
// Integer lattices in Z^n with exact membership tests.

#ifndef NILCOH_LATTICE_HPP
#define NILCOH_LATTICE_HPP

#include <vector>

#include "nilcoh/basic.hpp"

namespace nilcoh {

using IntegerVector = std::vector<Integer>;

// The Z-span of a finite set of vectors, kept in row Hermite normal form.
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t dimension) : dimension_(dimension) {}
    IntegerLattice(std::size_t dimension, const std::vector<IntegerVector>& generators);

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return basis_.size(); }
    // Echelon rows with positive pivots and reduced entries above each pivot.
    const std::vector<IntegerVector>& basis() const { return basis_; }

    void add_generator(IntegerVector v);
    bool contains(IntegerVector v) const;

private:
    void rebuild(std::vector<IntegerVector> rows);

    std::size_t dimension_;
    std::vector<IntegerVector> basis_;
};

}  // namespace nilcoh

#endif  // NILCOH_LATTICE_HPP
