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

#include "nilcoh/words.hpp"

#include <cctype>
#include <map>
#include <set>

#include <fmt/format.h>

#include "nilcoh/magnus.hpp"

namespace nilcoh {

std::string sequence_to_string(std::span<const int> seq) {
    bool small = std::all_of(seq.begin(), seq.end(), [](int i) { return i >= 1 && i <= 9; });
    return small ? fmt::format("{}", fmt::join(seq, "")) : fmt::format("{}", fmt::join(seq, ","));
}

std::string sequence_to_letters(std::span<const int> seq) {
    std::string out;
    for (int i : seq) {
        if (i < 1 || i > 26) return sequence_to_string(seq);
        out.push_back(static_cast<char>('a' + i - 1));
    }
    return out;
}

Sequence parse_sequence(const std::string& text) {
    Sequence out;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            std::string part = text.substr(pos, next - pos);
            int value = 0;
            try {
                value = std::stoi(part);
            } catch (const std::exception&) {
                throw PreconditionError("malformed index sequence: " + text);
            }
            if (value < 1) throw PreconditionError("indices must be >= 1: " + text);
            out.push_back(value);
            pos = next + 1;
        }
        return out;
    }
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch >= '1' && ch <= '9') {
            out.push_back(ch - '0');
        } else if (ch >= 'a' && ch <= 'z') {
            out.push_back(ch - 'a' + 1);
        } else {
            throw PreconditionError("malformed index sequence: " + text);
        }
    }
    return out;
}

// --- Word -------------------------------------------------------------------

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_) {
        if (l.generator < 1 || (l.sign != 1 && l.sign != -1)) {
            throw PreconditionError("invalid letter in word");
        }
    }
}

Word Word::generator(int index, int sign) { return Word({Letter{index, sign}}); }

int Word::max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.generator);
    return m;
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l.sign = -l.sign;
    Word w;
    w.letters_ = std::move(out);
    return w;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out *= b;
    return out;
}

Word& Word::operator*=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word normalize(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.length());
    for (const Letter& l : w.letters()) {
        if (!stack.empty() && stack.back().generator == l.generator && stack.back().sign == -l.sign) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return Word(std::move(stack));
}

Word power(const Word& w, long exponent) {
    const Word base = exponent < 0 ? w.inverse() : w;
    Word out;
    for (long i = 0; i < std::labs(exponent); ++i) out *= base;
    return normalize(out);
}

Word commutator(const Word& a, const Word& b) {
    return normalize(a * b * a.inverse() * b.inverse());
}

Word left_normed_commutator(const std::vector<Word>& parts) {
    if (parts.empty()) return Word();
    Word acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = commutator(acc, parts[i]);
    return acc;
}

Word parse_word(const std::string& text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_space = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](int& value) {
        std::size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
            throw PreconditionError("malformed exponent in word: " + text);
        }
        value = std::stoi(text.substr(start, i - start));
    };
    skip_space();
    if (text.find_first_not_of(" \t\n1") == std::string::npos) return Word();
    while (i < n) {
        skip_space();
        if (i >= n) break;
        char ch = text[i];
        int generator = 0;
        int sign = 1;
        if (ch == 'x' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            ++i;
            read_int(generator);
        } else if (ch >= 'a' && ch <= 'z') {
            generator = ch - 'a' + 1;
            ++i;
        } else if (ch >= 'A' && ch <= 'Z') {
            generator = ch - 'A' + 1;
            sign = -1;
            ++i;
        } else {
            throw PreconditionError(fmt::format("unexpected character '{}' in word: {}", ch, text));
        }
        if (generator < 1) throw PreconditionError("generator index must be >= 1: " + text);
        int exponent = 1;
        skip_space();
        if (i < n && text[i] == '^') {
            ++i;
            skip_space();
            read_int(exponent);
        }
        for (int e = 0; e < std::abs(exponent); ++e) {
            letters.push_back(Letter{generator, exponent < 0 ? -sign : sign});
        }
    }
    return Word(std::move(letters));
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    if (w.max_generator() <= 26) {
        std::string out;
        for (const Letter& l : w.letters()) {
            char base = l.sign > 0 ? 'a' : 'A';
            out.push_back(static_cast<char>(base + l.generator - 1));
        }
        return out;
    }
    std::vector<std::string> parts;
    for (const Letter& l : w.letters()) {
        parts.push_back(l.sign > 0 ? fmt::format("x{}", l.generator)
                                   : fmt::format("x{}^-1", l.generator));
    }
    return fmt::format("{}", fmt::join(parts, " "));
}

// --- standard sequences -----------------------------------------------------

bool is_standard(std::span<const int> seq) {
    if (seq.empty()) return false;
    for (std::size_t s = 1; s < seq.size(); ++s) {
        auto suffix = seq.subspan(s);
        if (!std::lexicographical_compare(seq.begin(), seq.end(), suffix.begin(), suffix.end())) {
            return false;
        }
    }
    return true;
}

std::vector<Sequence> standard_sequences(int q, int k, std::uint64_t bound) {
    if (q < 1 || k < 1) throw PreconditionError("standard_sequences requires q >= 1 and k >= 1");
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > bound / static_cast<std::uint64_t>(q)) {
            throw ResourceError(fmt::format("enumeration of {}^{} sequences exceeds bound {}", q, k, bound));
        }
        size *= static_cast<std::uint64_t>(q);
    }
    // Duval's algorithm: every Lyndon word of length <= k in lexicographic order.
    std::vector<Sequence> out;
    Sequence w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == q) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

int mobius(int n) {
    if (n < 1) throw PreconditionError("mobius requires n >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

WittNumber witt_number(int q, int k) {
    if (q < 1 || k < 1) throw PreconditionError("witt_number requires q >= 1 and k >= 1");
    Integer sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        sum += mobius(k / d) * boost::multiprecision::pow(Integer(q), static_cast<unsigned>(d));
    }
    return WittNumber{q, k, sum / k};
}

std::pair<Sequence, Sequence> standard_factorization(std::span<const int> seq) {
    if (!is_standard(seq) || seq.size() < 2) {
        throw PreconditionError("standard factorization needs a standard sequence of length >= 2");
    }
    for (std::size_t s = 1; s < seq.size(); ++s) {
        if (is_standard(seq.subspan(s))) {
            return {subsequence(seq, 0, s), subsequence(seq, s, seq.size())};
        }
    }
    // The last letter is always standard.
    return {subsequence(seq, 0, seq.size() - 1), subsequence(seq, seq.size() - 1, seq.size())};
}

Word lyndon_bracket(std::span<const int> seq) {
    if (!is_standard(seq)) throw PreconditionError("lyndon_bracket requires a standard sequence");
    if (seq.size() == 1) return Word::generator(seq[0]);
    auto [left, right] = standard_factorization(seq);
    return commutator(lyndon_bracket(left), lyndon_bracket(right));
}

namespace {

class CommutatorBuilder {
public:
    const Word& get(const Sequence& seq) {
        if (auto it = memo_.find(seq); it != memo_.end()) return it->second;
        if (!active_.insert(seq).second) {
            throw std::logic_error("cyclic correction while building standard commutator");
        }
        Word w;
        if (seq.size() == 1) {
            w = Word::generator(seq[0]);
        } else {
            auto [left, right] = standard_factorization(seq);
            w = commutator(get(left), get(right));
            const int k = static_cast<int>(seq.size());
            const TruncatedPolynomial p = magnus_expand(w, k + 1);
            // The bracket is unitriangular on Lyndon anagrams; strip the larger ones.
            for (const auto& [index, value] : p.terms()) {
                if (static_cast<int>(index.size()) != k || index == seq || !is_standard(index)) continue;
                w *= power(get(index), -static_cast<long>(value));
            }
            w = normalize(w);
        }
        active_.erase(seq);
        return memo_.emplace(seq, std::move(w)).first->second;
    }

private:
    std::map<Sequence, Word> memo_;
    std::set<Sequence> active_;
};

}  // namespace

Word standard_commutator(std::span<const int> seq) {
    if (!is_standard(seq)) throw PreconditionError("standard_commutator requires a standard sequence");
    CommutatorBuilder builder;
    return builder.get(Sequence(seq.begin(), seq.end()));
}

}  // namespace nilcoh
