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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "report.hpp"
#include "rewrite.hpp"

namespace qleft {

/// Monomial z_{i_1} ... z_{i_k} in the exterior-type algebra.
class ZWord {
   public:
    ZWord() = default;
    explicit ZWord(std::vector<int> letters) : letters_(std::move(letters)) {}
    ZWord(std::initializer_list<int> letters) : letters_(letters) {}

    std::size_t degree() const noexcept { return letters_.size(); }
    const std::vector<int>& letters() const noexcept { return letters_; }

    friend std::strong_ordering operator<=>(const ZWord& a, const ZWord& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const ZWord&, const ZWord&) = default;

    std::string to_string() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += ' ';
            s += "z" + std::to_string(letters_[i]);
        }
        return s;
    }

   private:
    std::vector<int> letters_;
};

using LambdaPoly = LinearCombination<ZWord>;
using LambdaTensor = LinearCombination<std::pair<ZWord, Word>>;
using LambdaTriple = LinearCombination<std::tuple<ZWord, Word, Word>>;

enum class WindowChoice { Leftmost, Rightmost };

struct ScaledZWord {
    LaurentPoly coefficient;
    ZWord word;
};

/// Reduce a single monomial with the degree-n relations
///   z_{i_1} ... z_{i_n} = (-q)^(-l(I)) z_1 ... z_n   (I a permutation),  0 otherwise.
/// Windows equal to (1, ..., n) are already reduced. Each relation maps a
/// monomial to a scalar multiple of one monomial, so the result is a single
/// term or nothing.
inline std::optional<ScaledZWord> reduce_zword(const ZWord& zw, int n, WindowChoice choice = WindowChoice::Leftmost) {
    std::vector<int> letters = zw.letters();
    LaurentPoly coefficient = LaurentPoly::one();
    const std::size_t len = letters.size();
    const std::size_t un = static_cast<std::size_t>(n);
    if (len < un) return ScaledZWord{coefficient, zw};
    auto is_sorted_window = [&](std::size_t pos) {
        for (std::size_t a = 0; a < un; ++a)
            if (letters[pos + a] != static_cast<int>(a) + 1) return false;
        return true;
    };
    while (true) {
        std::optional<std::size_t> pos;
        for (std::size_t k = 0; k + un <= len; ++k) {
            std::size_t p = choice == WindowChoice::Leftmost ? k : len - un - k;
            if (!is_sorted_window(p)) {
                pos = p;
                break;
            }
        }
        if (!pos) return ScaledZWord{std::move(coefficient), ZWord(std::move(letters))};
        IndexTuple window(std::vector<int>(letters.begin() + *pos, letters.begin() + *pos + un));
        if (!window.is_permutation()) return std::nullopt;
        coefficient *= neg_q_pow(-length_stat(window));
        for (std::size_t a = 0; a < un; ++a) letters[*pos + a] = static_cast<int>(a) + 1;
    }
}

inline LambdaPoly lambda_normal_form(const LambdaPoly& p, int n, WindowChoice choice = WindowChoice::Leftmost) {
    LambdaPoly out;
    for (const auto& [zw, c] : p)
        if (auto r = reduce_zword(zw, n, choice)) out.add(r->word, c * r->coefficient);
    return out;
}

/// rho(z_i) = sum_j z_j (x) X[j,i], extended multiplicatively, left factors
/// reduced in the exterior algebra and right factors by rs.
inline LambdaTensor rho_word(const ZWord& zw, int n, const RewriteSystem& rs) {
    const std::size_t k = zw.degree();
    if (k > static_cast<std::size_t>(n))
        throw UnsupportedDegree("rho is evaluated on monomials of degree <= n; got degree " + std::to_string(k));
    LambdaTensor out;
    std::map<Word, NcPoly> nf_cache;
    std::vector<int> j(k, 1);
    std::vector<Generator> right(k);
    while (true) {
        if (auto left = reduce_zword(ZWord(j), n)) {
            for (std::size_t a = 0; a < k; ++a) right[a] = Generator(j[a], zw.letters()[a]);
            Word w(right);
            auto it = nf_cache.find(w);
            if (it == nf_cache.end()) it = nf_cache.emplace(w, normal_form(NcPoly::single(w), rs)).first;
            for (const auto& [rw, rc] : it->second) out.add({left->word, rw}, left->coefficient * rc);
        }
        std::size_t pos = k;
        while (pos > 0 && j[pos - 1] == n) j[--pos] = 1;
        if (pos == 0) break;
        ++j[pos - 1];
    }
    return out;
}

inline std::string to_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        detail::append_term(out, it->second, it->first.degree() ? it->first.to_string() : "", Format::Text, first);
        first = false;
    }
    return out;
}

inline std::string to_string(const LambdaTensor& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [zw, w] = it->first;
        std::string right = w.empty() ? "1" : detail::word_factor(w, Format::Text);
        detail::append_term(out, it->second, zw.to_string() + " ⊗ " + right, Format::Text, first);
        first = false;
    }
    return out;
}

/// rho respects every relation: rho(z_I) = delta (-q)^(-l(I)) z_1...z_n (x) D,
/// with D in normal form for rs.
inline Report check_comodule_relations(int n, const RewriteSystem& rs) {
    const ZWord top(identity_tuple(n).entries());
    const NcPoly d = normal_form(build_D(n), rs);
    const auto tuples = all_tuples(n, n);
    auto results = parallel_map(tuples.size(), [&](std::size_t k) {
        const IndexTuple& I = tuples[k];
        LambdaTensor got = rho_word(ZWord(I.entries()), n, rs);
        LambdaTensor expected;
        if (I.is_permutation())
            for (const auto& [w, c] : d) expected.add({top, w}, neg_q_pow(-length_stat(I)) * c);
        return ReportItem{"rho(z" + I.to_string() + ")", to_string(expected), to_string(got), got == expected};
    });
    Report r{"comodule", n, mode_name(rs.mode()), std::move(results), {}};
    r.summary = std::to_string(tuples.size() - r.failures()) + "/" + std::to_string(tuples.size()) +
                " relations respected by the coaction";
    return r;
}

/// Coaction axioms (rho (x) I) rho = (I (x) Delta) rho and (I (x) eps) rho = I
/// on every monomial of degree 1 and 2 (degree <= n).
inline Report check_comodule_axioms(int n, const RewriteSystem& rs) {
    std::vector<ZWord> inputs;
    for (int d = 1; d <= std::min(n, 2); ++d)
        for (const auto& t : all_tuples(n, d)) inputs.emplace_back(t.entries());
    auto results = parallel_map(inputs.size(), [&](std::size_t k) {
        const ZWord& zw = inputs[k];
        const LambdaTensor rho = rho_word(zw, n, rs);
        LambdaTriple lhs, rhs;
        LambdaPoly counit_side;
        for (const auto& [pair, c] : rho) {
            const auto& [left, right] = pair;
            for (const auto& [inner, c2] : rho_word(left, n, rs))
                lhs.add({inner.first, inner.second, right}, c * c2);
            for (const auto& [halves, c3] : tensor_normal_form(coproduct_word(right, n), rs))
                rhs.add({left, halves.first, halves.second}, c * c3);
            counit_side.add(left, c * counit_word(right));
        }
        const LambdaPoly expected_counit = lambda_normal_form(LambdaPoly::single(zw), n);
        const bool coassoc = lhs == rhs;
        const bool counital = counit_side == expected_counit;
        return ReportItem{zw.to_string(), "coassociative and counital",
                          std::string(coassoc ? "coassociative" : "NOT coassociative") + ", " +
                              (counital ? "counital" : "NOT counital: " + to_string(counit_side)),
                          coassoc && counital};
    });
    Report r{"comodule-axioms", n, mode_name(rs.mode()), std::move(results), {}};
    r.summary = std::to_string(inputs.size() - r.failures()) + "/" + std::to_string(inputs.size()) +
                " monomials satisfy the coaction axioms";
    return r;
}

}  // namespace qleft
