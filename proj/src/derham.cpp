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

#include "nilcoh/derham.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include <fmt/format.h>

namespace nilcoh {

bool MonomialLess::operator()(const std::vector<Sequence>& a, const std::vector<Sequence>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ShortLexLess{});
}

// --- BetaPolynomial ---------------------------------------------------------

BetaPolynomial BetaPolynomial::constant(const Integer& value) {
    BetaPolynomial p;
    p.add_term({}, value);
    return p;
}

BetaPolynomial BetaPolynomial::variable(Sequence w) {
    if (w.empty()) return constant(1);
    BetaPolynomial p;
    p.add_term({std::move(w)}, 1);
    return p;
}

void BetaPolynomial::add_term(BetaMonomial monomial, const Integer& value) {
    if (value == 0) return;
    std::sort(monomial.begin(), monomial.end(), ShortLexLess{});
    auto [it, inserted] = terms_.emplace(std::move(monomial), value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& other) {
    for (const auto& [m, v] : other.terms_) add_term(m, v);
    return *this;
}

BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b) {
    BetaPolynomial out;
    for (const auto& [ma, va] : a.terms_) {
        for (const auto& [mb, vb] : b.terms_) {
            BetaMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), va * vb);
        }
    }
    return out;
}

BetaPolynomial operator*(const Integer& scalar, const BetaPolynomial& a) {
    BetaPolynomial out;
    for (const auto& [m, v] : a.terms_) out.add_term(m, scalar * v);
    return out;
}

Integer BetaPolynomial::evaluate(const TruncatedPolynomial& p) const {
    Integer sum = 0;
    for (const auto& [m, v] : terms_) {
        Integer product = v;
        for (const Sequence& w : m) product *= p.coefficient(w);
        sum += product;
    }
    return sum;
}

// --- DifferentialForm -------------------------------------------------------

DifferentialForm DifferentialForm::function(const BetaPolynomial& p) {
    DifferentialForm f;
    if (!p.is_zero()) f.terms_.emplace(WedgeMonomial{}, p);
    return f;
}

DifferentialForm DifferentialForm::basis(Sequence w) {
    DifferentialForm f;
    if (!w.empty()) f.terms_.emplace(WedgeMonomial{std::move(w)}, BetaPolynomial::constant(1));
    return f;
}

int DifferentialForm::grade() const {
    if (terms_.empty()) return -1;
    const std::size_t g = terms_.begin()->first.size();
    for (const auto& [w, p] : terms_) {
        if (w.size() != g) return -1;
    }
    return static_cast<int>(g);
}

void DifferentialForm::add_term(std::vector<Sequence> factors, const BetaPolynomial& coefficient) {
    if (coefficient.is_zero()) return;
    // Insertion sort, counting transpositions; a repeated factor kills the term.
    bool negate = false;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            if (factors[j - 1] == factors[j]) return;
            if (!ShortLexLess{}(factors[j], factors[j - 1])) break;
            std::swap(factors[j - 1], factors[j]);
            negate = !negate;
        }
    }
    auto [it, inserted] = terms_.emplace(std::move(factors), negate ? Integer(-1) * coefficient : coefficient);
    if (!inserted) {
        it->second += negate ? Integer(-1) * coefficient : coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
    for (const auto& [w, p] : other.terms_) add_term(w, p);
    return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
    for (const auto& [w, p] : other.terms_) add_term(w, Integer(-1) * p);
    return *this;
}

DifferentialForm operator*(const Integer& scalar, const DifferentialForm& a) {
    DifferentialForm out;
    for (const auto& [w, p] : a.terms_) out.add_term(w, scalar * p);
    return out;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    DifferentialForm out;
    for (const auto& [wa, pa] : a.terms()) {
        for (const auto& [wb, pb] : b.terms()) {
            std::vector<Sequence> factors = wa;
            factors.insert(factors.end(), wb.begin(), wb.end());
            out.add_term(std::move(factors), pa * pb);
        }
    }
    return out;
}

DifferentialForm exterior_d(const DifferentialForm& form) {
    DifferentialForm out;
    for (const auto& [w, p] : form.terms()) {
        for (const auto& [monomial, value] : p.terms()) {
            // d(prod beta) = sum over factors, with multiplicity.
            for (std::size_t i = 0; i < monomial.size(); ++i) {
                BetaMonomial rest = monomial;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                BetaPolynomial coefficient;
                coefficient.add_term(std::move(rest), value);
                std::vector<Sequence> factors{monomial[i]};
                factors.insert(factors.end(), w.begin(), w.end());
                out.add_term(std::move(factors), coefficient);
            }
        }
    }
    return out;
}

namespace {

Sequence reversed(Sequence w) {
    std::reverse(w.begin(), w.end());
    return w;
}

// The automorphism reversing every index word.
DifferentialForm mirror(const DifferentialForm& form) {
    DifferentialForm out;
    for (const auto& [w, p] : form.terms()) {
        BetaPolynomial q;
        for (const auto& [m, v] : p.terms()) {
            BetaMonomial r;
            for (const Sequence& s : m) r.push_back(reversed(s));
            q.add_term(std::move(r), v);
        }
        std::vector<Sequence> factors;
        for (const Sequence& s : w) factors.push_back(reversed(s));
        out.add_term(std::move(factors), q);
    }
    return out;
}

// w minus its last letter, when that letter is h.
bool drops_to(const Sequence& w, int h, Sequence& shorter) {
    if (w.empty() || w.back() != h) return false;
    shorter.assign(w.begin(), w.end() - 1);
    return true;
}

DifferentialForm pullback_right(const DifferentialForm& form, int h) {
    DifferentialForm out;
    for (const auto& [w, p] : form.terms()) {
        BetaPolynomial coefficient;
        for (const auto& [m, v] : p.terms()) {
            BetaPolynomial product = BetaPolynomial::constant(v);
            for (const Sequence& s : m) {
                BetaPolynomial image = BetaPolynomial::variable(s);
                Sequence shorter;
                if (drops_to(s, h, shorter)) image += BetaPolynomial::variable(shorter);
                product = product * image;
            }
            coefficient += product;
        }
        DifferentialForm acc = DifferentialForm::function(coefficient);
        for (const Sequence& s : w) {
            DifferentialForm image = DifferentialForm::basis(s);
            Sequence shorter;
            if (drops_to(s, h, shorter)) image += DifferentialForm::basis(shorter);
            acc = wedge(acc, image);
        }
        out += acc;
    }
    return out;
}

DifferentialForm gamma_right(std::span<const int> index) {
    const int t = static_cast<int>(index.size());
    DifferentialForm out;
    for (int k0 = 1; k0 <= t; ++k0) {
        const Sequence head = subsequence(index, 0, static_cast<std::size_t>(k0));
        const int rest = t - k0;
        if (rest == 0) {
            out.add_term({head}, BetaPolynomial::constant(1));
            continue;
        }
        // Compositions of the tail: bit b set means a block boundary after
        // tail position b.
        for (unsigned mask = 0; mask < (1u << (rest - 1)); ++mask) {
            BetaMonomial blocks;
            std::size_t start = static_cast<std::size_t>(k0);
            for (int b = 0; b < rest; ++b) {
                const bool cut = b == rest - 1 || ((mask >> b) & 1u);
                if (!cut) continue;
                const std::size_t end = static_cast<std::size_t>(k0 + b + 1);
                blocks.push_back(subsequence(index, start, end));
                start = end;
            }
            BetaPolynomial coefficient;
            const Integer sign = blocks.size() % 2 == 0 ? 1 : -1;
            coefficient.add_term(std::move(blocks), sign);
            out.add_term({head}, coefficient);
        }
    }
    return out;
}

}  // namespace

DifferentialForm pullback(const DifferentialForm& form, int h, Side side) {
    if (side == Side::kRight) return pullback_right(form, h);
    return mirror(pullback_right(mirror(form), h));
}

DifferentialForm gamma_form(std::span<const int> index, Side side) {
    if (index.empty()) throw PreconditionError("gamma_form needs a non-empty index");
    if (side == Side::kRight) return gamma_right(index);
    return mirror(gamma_right(reversed(Sequence(index.begin(), index.end()))));
}

DifferentialForm massey_2form(std::span<const int> index, Side side) {
    if (index.size() < 2) throw PreconditionError("massey_2form needs |I| >= 2");
    DifferentialForm out;
    for (std::size_t r = 1; r < index.size(); ++r) {
        out += wedge(gamma_form(index.first(r), side), gamma_form(index.subspan(r), side));
    }
    return out;
}

// --- text -------------------------------------------------------------------

namespace {

std::string word_text(const Sequence& w) {
    const bool letters = std::all_of(w.begin(), w.end(), [](int i) { return i >= 1 && i <= 26; });
    return letters ? sequence_to_letters(w) : fmt::format("{{{}}}", fmt::join(w, ","));
}

}  // namespace

std::string to_string(const DifferentialForm& form, bool ascii) {
    struct Entry {
        BetaMonomial beta;
        WedgeMonomial dx;
        Integer value;
    };
    std::vector<Entry> entries;
    for (const auto& [w, p] : form.terms()) {
        for (const auto& [m, v] : p.terms()) entries.push_back(Entry{m, w, v});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        MonomialLess less;
        if (less(a.beta, b.beta)) return true;
        if (less(b.beta, a.beta)) return false;
        return less(a.dx, b.dx);
    });
    if (entries.empty()) return "0";
    const std::string beta = ascii ? "beta_" : "β_";
    const std::string wedge_sign = ascii ? " ^ " : " ∧ ";
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        if (i == 0) {
            if (e.value < 0) out += "-";
        } else {
            out += e.value < 0 ? " - " : " + ";
        }
        std::vector<std::string> parts;
        const Integer magnitude = e.value < 0 ? Integer(-e.value) : e.value;
        if (magnitude != 1 || (e.beta.empty() && e.dx.empty())) parts.push_back(magnitude.str());
        for (const Sequence& s : e.beta) parts.push_back(beta + word_text(s));
        std::vector<std::string> dx;
        for (const Sequence& s : e.dx) dx.push_back("dX_" + word_text(s));
        if (!dx.empty()) parts.push_back(fmt::format("{}", fmt::join(dx, wedge_sign)));
        out += fmt::format("{}", fmt::join(parts, " "));
    }
    return out;
}

std::string to_string(const BetaPolynomial& p, bool ascii) {
    return to_string(DifferentialForm::function(p), ascii);
}

namespace {

class FormParser {
public:
    explicit FormParser(const std::string& text) : text_(text) {}

    DifferentialForm parse() {
        DifferentialForm result = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw PreconditionError(fmt::format("cannot parse form at offset {}: {} in \"{}\"", pos_, why, text_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(const std::string& token) {
        skip_space();
        if (text_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool at_factor_start() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char ch = text_[pos_];
        return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) || basis_end() != 0 || beta_end() != 0;
    }

    // End offset of a "dX_" (also "d X_") token at pos_, or 0.
    std::size_t basis_end() const {
        if (pos_ >= text_.size() || text_[pos_] != 'd') return 0;
        std::size_t p = pos_ + 1;
        while (p < text_.size() && text_[p] == ' ') ++p;
        return text_.compare(p, 2, "X_") == 0 ? p + 2 : 0;
    }

    std::size_t beta_end() const {
        for (const char* token : {"β_", "beta_", "\\beta_"}) {
            const std::string t(token);
            if (text_.compare(pos_, t.size(), t) == 0) return pos_ + t.size();
        }
        return 0;
    }

    DifferentialForm expression() {
        DifferentialForm result;
        bool negative = consume("-");
        if (!negative) consume("+");
        while (true) {
            DifferentialForm t = term();
            result += negative ? Integer(-1) * t : t;
            if (consume("+")) {
                negative = false;
            } else if (consume("-")) {
                negative = true;
            } else {
                return result;
            }
        }
    }

    DifferentialForm term() {
        DifferentialForm result = factor();
        while (true) {
            if (consume("∧") || consume("\\wedge") || consume("^") || consume("*") || consume("/\\")) {
                result = wedge(result, factor());
            } else if (at_factor_start()) {
                result = wedge(result, factor());
            } else {
                return result;
            }
        }
    }

    Sequence word() {
        Sequence w;
        if (pos_ < text_.size() && text_[pos_] == '{') {
            const std::size_t close = text_.find('}', pos_);
            if (close == std::string::npos) fail("unterminated '{'");
            w = parse_sequence(text_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
        } else {
            // A run of letters, or a single digit as in dX_3.
            while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
                w.push_back(text_[pos_] - 'a' + 1);
                ++pos_;
            }
            if (w.empty() && pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '9') {
                w.push_back(text_[pos_] - '0');
                ++pos_;
            }
        }
        if (w.empty()) fail("empty index word");
        return w;
    }

    DifferentialForm factor() {
        skip_space();
        if (consume("(")) {
            DifferentialForm inner = expression();
            if (!consume(")")) fail("expected ')'");
            return inner;
        }
        if (const std::size_t end = basis_end(); end != 0) {
            pos_ = end;
            return DifferentialForm::basis(word());
        }
        if (const std::size_t end = beta_end(); end != 0) {
            pos_ = end;
            return DifferentialForm::function(BetaPolynomial::variable(word()));
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return DifferentialForm::function(BetaPolynomial::constant(Integer(text_.substr(start, pos_ - start))));
        }
        fail("expected a factor");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

DifferentialForm parse_form(const std::string& text) { return FormParser(text).parse(); }

Integer evaluate_1form(const DifferentialForm& form, const TruncatedPolynomial& point,
                       const TruncatedPolynomial& vector) {
    Integer sum = 0;
    for (const auto& [w, p] : form.terms()) {
        if (w.size() != 1) throw PreconditionError("evaluate_1form needs a 1-form");
        sum += p.evaluate(point) * vector.coefficient(w[0]);
    }
    return sum;
}

Integer evaluate_2form(const DifferentialForm& form, const TruncatedPolynomial& point, const TruncatedPolynomial& u,
                       const TruncatedPolynomial& v) {
    Integer sum = 0;
    for (const auto& [w, p] : form.terms()) {
        if (w.size() != 2) throw PreconditionError("evaluate_2form needs a 2-form");
        const Integer det = u.coefficient(w[0]) * v.coefficient(w[1]) - u.coefficient(w[1]) * v.coefficient(w[0]);
        if (det != 0) sum += p.evaluate(point) * det;
    }
    return sum;
}

const std::vector<ReferenceForm>& reference_forms() {
    static const std::vector<ReferenceForm> forms{
        {"gamma_ab", {1, 2}, false, "dX_ab - β_a dX_b"},
        {"massey_abc", {1, 2, 3}, true, "dX_a ∧ dX_bc + dX_ab ∧ dX_c - β_a dX_b ∧ dX_c - β_b dX_a ∧ dX_c"},
        {"gamma_abc", {1, 2, 3}, false, "dX_abc - β_c dX_ab - β_b β_c dX_a + β_bc dX_a"},
        {"massey_abcd", {1, 2, 3, 4}, true,
         "(dX_abc - β_c dX_ab - β_b β_c dX_a + β_bc dX_a) ∧ dX_d + (dX_ab - β_a dX_b) ∧ (dX_cd - β_c dX_d)"
         " + β_a ∧ (dX_bcd - β_d dX_bc - β_c β_d dX_b + β_cd dX_b)"},
        {"gamma_abcd", {1, 2, 3, 4}, false,
         "dX_abcd - β_d dX_abc + β_c β_d dX_ab + β_cd dX_ab - β_bcd dX_a - β_bc β_d dX_a - β_b β_cd dX_a"
         " - β_b β_c β_d dX_a"},
    };
    return forms;
}

}  // namespace nilcoh
