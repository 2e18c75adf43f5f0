/*
   Copyright 2026 The qleft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linear_combination.hpp"

namespace qleft {

/// Comatrix generator X[row, col], 1-based. Ordered lexicographically on
/// (row, col).
struct Generator {
    std::uint8_t row = 1;
    std::uint8_t col = 1;

    constexpr Generator() = default;
    constexpr Generator(int r, int c) : row(static_cast<std::uint8_t>(r)), col(static_cast<std::uint8_t>(c)) {}

    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// Product of generators; the empty word is the unit.
///
/// Words are totally ordered length-first, then lexicographically by letter.
/// This order is compatible with multiplication on both sides.
class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Generator> letters) : letters_(letters) {}

    static Word generator(int row, int col) { return Word{Generator(row, col)}; }
    static Word from_span(std::span<const Generator> letters) {
        return Word(std::vector<Generator>(letters.begin(), letters.end()));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t degree() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Generator& operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Generator> letters() const noexcept { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word subword(std::size_t pos, std::size_t len) const {
        return Word(std::vector<Generator>(letters_.begin() + pos, letters_.begin() + pos + len));
    }
    Word reversed() const { return Word(std::vector<Generator>(letters_.rbegin(), letters_.rend())); }

    Word& operator*=(const Word& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                      b.letters_.begin(), b.letters_.end());
    }
    friend bool operator==(const Word&, const Word&) = default;

   private:
    std::vector<Generator> letters_;
};

/// Length+lexicographic comparison.
inline std::strong_ordering word_cmp(const Word& u, const Word& v) { return u <=> v; }

using NcPoly = LinearCombination<Word>;
using WordPair = std::pair<Word, Word>;
using TensorPoly = LinearCombination<WordPair>;

/// Linear map defined on words.
using WordMap = std::function<NcPoly(const Word&)>;

enum class Format { Text, Latex };

inline NcPoly constant_poly(const LaurentPoly& c) { return NcPoly::single(Word{}, c); }
inline NcPoly generator_poly(int row, int col) { return NcPoly::single(Word::generator(row, col)); }

inline NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) r.add(u * v, cu * cv);
    return r;
}

inline bool has_valid_letters(const Word& w, int n) {
    return std::all_of(w.begin(), w.end(), [n](const Generator& g) {
        return g.row >= 1 && g.row <= n && g.col >= 1 && g.col <= n;
    });
}

/// Delta(X_ik) = sum_j X_ij (x) X_jk, extended multiplicatively. No reduction.
inline TensorPoly coproduct_word(const Word& w, int n) {
    TensorPoly r;
    const std::size_t len = w.size();
    std::vector<int> mid(len, 1);
    std::vector<Generator> left(len), right(len);
    while (true) {
        for (std::size_t a = 0; a < len; ++a) {
            left[a] = Generator(w[a].row, mid[a]);
            right[a] = Generator(mid[a], w[a].col);
        }
        r.add(WordPair{Word(left), Word(right)}, LaurentPoly::one());
        std::size_t pos = len;
        while (pos > 0 && mid[pos - 1] == n) mid[--pos] = 1;
        if (pos == 0) break;
        ++mid[pos - 1];
    }
    return r;
}

inline TensorPoly coproduct(const NcPoly& p, int n) {
    TensorPoly r;
    for (const auto& [w, c] : p) r += c * coproduct_word(w, n);
    return r;
}

/// epsilon(X_ik) = delta_ik, extended multiplicatively.
inline LaurentPoly counit_word(const Word& w) {
    bool diagonal = std::all_of(w.begin(), w.end(), [](const Generator& g) { return g.row == g.col; });
    return diagonal ? LaurentPoly::one() : LaurentPoly{};
}

inline LaurentPoly counit(const NcPoly& p) {
    LaurentPoly r;
    for (const auto& [w, c] : p) r += c * counit_word(w);
    return r;
}

inline TensorPoly tensor(const NcPoly& a, const NcPoly& b) {
    TensorPoly r;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) r.add(WordPair{u, v}, cu * cv);
    return r;
}

/// Factor-wise product (a (x) b)(c (x) d) = ac (x) bd.
inline TensorPoly tensor_mul(const TensorPoly& s, const TensorPoly& t) {
    TensorPoly r;
    for (const auto& [p, cp] : s)
        for (const auto& [q, cq] : t) r.add(WordPair{p.first * q.first, p.second * q.second}, cp * cq);
    return r;
}

/// Bilinear image of t under f (x) g.
inline TensorPoly tensor_map(const TensorPoly& t, const WordMap& f, const WordMap& g) {
    TensorPoly r;
    for (const auto& [pair, c] : t) r += c * tensor(f(pair.first), g(pair.second));
    return r;
}

inline TensorPoly swap_factors(const TensorPoly& t) {
    TensorPoly r;
    for (const auto& [pair, c] : t) r.add(WordPair{pair.second, pair.first}, c);
    return r;
}

/// Apply a word map linearly to a polynomial.
inline NcPoly apply_linear(const WordMap& f, const NcPoly& p) {
    NcPoly r;
    for (const auto& [w, c] : p) r += c * f(w);
    return r;
}

inline NcPoly identity_word_map(const Word& w) { return NcPoly::single(w); }

// ---------------------------------------------------------------------------
// Rendering

inline std::string to_string(const Generator& g, Format fmt = Format::Text) {
    std::ostringstream os;
    if (fmt == Format::Latex)
        os << "X_{" << int(g.row) << int(g.col) << '}';
    else
        os << "X[" << int(g.row) << ',' << int(g.col) << ']';
    return os.str();
}

/// "X[i,j] X[k,l] ..." (or "1" for the empty word).
inline std::string to_string(const Word& w, Format fmt = Format::Text) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i], fmt);
    }
    return s;
}

namespace detail {

/// Word as a product factor: "X[1,2]*X[2,1]" (text) or "X_{12} X_{21}" (latex).
inline std::string word_factor(const Word& w, Format fmt) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += (fmt == Format::Latex ? " " : "*");
        s += to_string(w[i], fmt);
    }
    return s;
}

/// Append one signed term "coefficient*body" to a running sum. An empty body
/// is the unit.
inline void append_term(std::string& out, const LaurentPoly& c, const std::string& body, Format fmt,
                        bool first) {
    const bool latex = fmt == Format::Latex;
    const char* times = latex ? " " : "*";
    if (c.is_monomial()) {
        const auto& [e, coeff] = c.terms()[0];
        const bool negative = coeff < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mag = LaurentPoly::monomial(abs(coeff), e).to_string();
        if (latex) mag = LaurentPoly::monomial(abs(coeff), e).to_latex();
        if (body.empty())
            out += mag;
        else if (mag == "1")
            out += body;
        else
            out += mag + times + body;
        return;
    }
    if (!first) out += " + ";
    std::string paren = "(" + (latex ? c.to_latex() : c.to_string()) + ")";
    out += body.empty() ? paren : paren + times + body;
}

}  // namespace detail

/// Signed terms in descending word order; "0" for zero.
inline std::string to_string(const NcPoly& p, Format fmt = Format::Text) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        detail::append_term(out, it->second, detail::word_factor(it->first, fmt), fmt, first);
        first = false;
    }
    return out;
}

inline std::string to_string(const TensorPoly& t, Format fmt = Format::Text) {
    if (t.is_zero()) return "0";
    const std::string otimes = fmt == Format::Latex ? " \\otimes " : " ⊗ ";
    std::string out;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [u, v] = it->first;
        std::string left = u.empty() ? "1" : detail::word_factor(u, fmt);
        std::string right = v.empty() ? "1" : detail::word_factor(v, fmt);
        detail::append_term(out, it->second, left + otimes + right, fmt, first);
        first = false;
    }
    return out;
}

}  // namespace qleft
