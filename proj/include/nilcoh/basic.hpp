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
// Basic vocabulary shared by every module: exact integers, index sequences,
// and the error types used to report violated preconditions.

#ifndef NILCOH_BASIC_HPP
#define NILCOH_BASIC_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilcoh {

using Integer = boost::multiprecision::cpp_int;

// A sequence i_1 ... i_n over {1, ..., q}. Indexes monomials X_{i_1}...X_{i_n},
// coefficient functionals c_I and standard sequences.
using Sequence = std::vector<int>;

// Orders sequences first by length, then lexicographically. This is the
// canonical monomial order for printing and for map keys.
struct ShortLexLess {
    bool operator()(std::span<const int> a, std::span<const int> b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
    bool operator()(const Sequence& a, const Sequence& b) const {
        return (*this)(std::span<const int>(a), std::span<const int>(b));
    }
};

// Thrown when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed the configured size bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Sequence subsequence(std::span<const int> seq, std::size_t first, std::size_t last) {
    return Sequence(seq.begin() + static_cast<std::ptrdiff_t>(first),
                    seq.begin() + static_cast<std::ptrdiff_t>(last));
}

inline Sequence concat(std::span<const int> a, std::span<const int> b) {
    Sequence out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// "112" for indices below 10, "1,10,2" otherwise.
std::string sequence_to_string(std::span<const int> seq);

// Accepts digit strings ("112"), letter strings ("aab", a = 1) and
// comma-separated indices ("1,10,2").
Sequence parse_sequence(const std::string& text);

// Letter form used by the appendix calculus ("abc").
std::string sequence_to_letters(std::span<const int> seq);

inline std::string integer_to_string(const Integer& v) { return v.str(); }

}  // namespace nilcoh

#endif  // NILCOH_BASIC_HPP
