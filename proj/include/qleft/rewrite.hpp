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

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcomb.hpp"

namespace qleft {

/// Which quotient of the free matrix bialgebra a rewrite system presents.
/// Custom is for hand-built fixture systems.
enum class Mode { SLtilde, Mtilde, Custom };

inline std::string mode_name(Mode m) {
    switch (m) {
        case Mode::SLtilde: return "sl";
        case Mode::Mtilde: return "m";
        case Mode::Custom: return "custom";
    }
    return "?";
}

/// lhs -> rhs, with every word of rhs strictly below lhs.
struct Rule {
    IndexTuple index;
    Word lhs;
    NcPoly rhs;
};

struct Redex {
    std::size_t position;
    const Rule* rule;
};

class RewriteSystem {
   public:
    /// The reduction system of the quotient: for each admissible I in [n]^n the rule
    ///   X[n,i_1] ... X[1,i_n] -> (-q)^(n(n-1)/2) [ delta (-q)^(-l(I)) T - (other terms of D_I) ]
    /// with T = 1 (SLtilde) or T = D (Mtilde, where I = (1,...,n) has no rule).
    static RewriteSystem build(int n, Mode mode) {
        if (n < 2 || n > kMaxN) throw MalformedInput("n must lie in [2, " + std::to_string(kMaxN) + "]");
        if (mode == Mode::Custom) throw MalformedInput("build() constructs SLtilde or Mtilde systems only");
        const int top = n * (n - 1) / 2;
        const IndexTuple identity = identity_tuple(n);
        const NcPoly D = build_D(n);
        std::vector<Rule> rules;
        std::vector<Generator> letters(n);
        for (auto& I : all_tuples(n, n)) {
            if (mode == Mode::Mtilde && I == identity) continue;
            for (int a = 0; a < n; ++a) letters[a] = Generator(n - a, I[a]);
            Word lhs(letters);
            NcPoly rest = build_DI(n, I);
            rest.add(lhs, -neg_q_pow(-top));
            NcPoly target;
            if (I.is_permutation()) {
                target = neg_q_pow(-length_stat(I)) *
                         (mode == Mode::SLtilde ? constant_poly(LaurentPoly::one()) : D);
            }
            rules.push_back(Rule{std::move(I), std::move(lhs), neg_q_pow(top) * (target - rest)});
        }
        return RewriteSystem(n, mode, std::move(rules));
    }

    /// Arbitrary rule set over the n x n comatrix alphabet (fixtures).
    static RewriteSystem custom(int n, std::vector<Rule> rules) {
        if (n < 1 || n > kMaxN) throw MalformedInput("n out of range");
        return RewriteSystem(n, Mode::Custom, std::move(rules));
    }

    int n() const noexcept { return n_; }
    Mode mode() const noexcept { return mode_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    const Rule* match(std::span<const Generator> window) const {
        if (window.size() > kMaxLhs) return nullptr;
        auto it = index_.find(key(window));
        return it == index_.end() ? nullptr : &rules_[it->second];
    }
    const Rule* rule_for(const Word& lhs) const { return match(lhs.letters()); }

    std::optional<Redex> leftmost_redex(const Word& w) const {
        const auto letters = w.letters();
        for (std::size_t pos = 0; pos < letters.size(); ++pos)
            for (std::size_t len : lengths_) {
                if (pos + len > letters.size()) break;
                if (const Rule* r = match(letters.subspan(pos, len))) return Redex{pos, r};
            }
        return std::nullopt;
    }

    std::vector<Redex> redexes(const Word& w) const {
        std::vector<Redex> out;
        const auto letters = w.letters();
        for (std::size_t pos = 0; pos < letters.size(); ++pos)
            for (std::size_t len : lengths_) {
                if (pos + len > letters.size()) break;
                if (const Rule* r = match(letters.subspan(pos, len))) out.push_back(Redex{pos, r});
            }
        return out;
    }

    bool is_irreducible(const Word& w) const { return !leftmost_redex(w).has_value(); }

    /// Is there a redex ending exactly at the last letter?
    bool has_redex_ending_at_back(std::span<const Generator> letters) const {
        for (std::size_t len : lengths_) {
            if (len > letters.size()) break;
            if (match(letters.subspan(letters.size() - len, len))) return true;
        }
        return false;
    }

    static constexpr int kMaxN = 8;
    static constexpr std::size_t kMaxLhs = 8;

   private:
    RewriteSystem(int n, Mode mode, std::vector<Rule> rules) : n_(n), mode_(mode), rules_(std::move(rules)) {
        std::set<std::size_t> lengths;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const Rule& r = rules_[i];
            if (r.lhs.empty() || r.lhs.size() > kMaxLhs || !has_valid_letters(r.lhs, n_))
                throw MalformedInput("rule left-hand side " + to_string(r.lhs) + " is not admissible");
            for (const auto& [w, c] : r.rhs) {
                if (!has_valid_letters(w, n_))
                    throw MalformedInput("rule right-hand side word " + to_string(w) + " is out of range");
                if (!(w < r.lhs))
                    throw OrderViolation("rule " + to_string(r.lhs) + " -> ... has right-hand word " +
                                         to_string(w) + " not below its left-hand side");
            }
            if (!index_.emplace(key(r.lhs.letters()), i).second)
                throw MalformedInput("duplicate rule left-hand side " + to_string(r.lhs));
            lengths.insert(r.lhs.size());
        }
        lengths_.assign(lengths.begin(), lengths.end());
    }

    static std::uint64_t key(std::span<const Generator> window) {
        std::uint64_t k = 0;
        for (const auto& g : window) k = (k << 8) | (std::uint64_t(g.row) << 4) | g.col;
        return k;
    }

    int n_;
    Mode mode_;
    std::vector<Rule> rules_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::size_t> lengths_;
};

inline RewriteSystem build_rules(int n, Mode mode) { return RewriteSystem::build(n, mode); }

inline bool is_irreducible(const Word& w, const RewriteSystem& rs) { return rs.is_irreducible(w); }

namespace detail {

inline Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& middle) {
    std::vector<Generator> letters;
    letters.reserve(w.size() - len + middle.size());
    letters.insert(letters.end(), w.begin(), w.begin() + pos);
    letters.insert(letters.end(), middle.begin(), middle.end());
    letters.insert(letters.end(), w.begin() + pos + len, w.end());
    return Word(std::move(letters));
}

inline void accumulate(std::map<Word, LaurentPoly>& m, Word&& w, LaurentPoly&& c) {
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace detail

/// Unique irreducible representative of p. Repeatedly rewrites the leftmost
/// redex of the greatest reducible word; every rewrite strictly lowers that
/// word, so the loop terminates.
inline NcPoly normal_form(const NcPoly& p, const RewriteSystem& rs) {
    std::map<Word, LaurentPoly> work(p.terms());
    NcPoly out;
    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const Word& w = node.key();
        auto redex = rs.leftmost_redex(w);
        if (!redex) {
            out.add(std::move(node.key()), std::move(node.mapped()));
            continue;
        }
        const std::size_t len = redex->rule->lhs.size();
        for (const auto& [rw, rc] : redex->rule->rhs)
            detail::accumulate(work, detail::splice(w, redex->position, len, rw), node.mapped() * rc);
    }
    return out;
}

/// Reduction strategies for the confluence probe.
struct Strategy {
    enum class Kind { GreatestWordLeftmostWindow, SmallestWordRightmostWindow, RandomWordRandomWindow };
    Kind kind = Kind::GreatestWordLeftmostWindow;
    std::uint64_t seed = 0;

    std::string name() const {
        switch (kind) {
            case Kind::GreatestWordLeftmostWindow: return "greatest-word/leftmost-window";
            case Kind::SmallestWordRightmostWindow: return "smallest-word/rightmost-window";
            case Kind::RandomWordRandomWindow: return "random-word/random-window(seed=" + std::to_string(seed) + ")";
        }
        return "?";
    }
    friend bool operator==(const Strategy&, const Strategy&) = default;
};

inline std::vector<Strategy> standard_strategies(std::uint64_t seed = 0) {
    return {{Strategy::Kind::GreatestWordLeftmostWindow, 0},
            {Strategy::Kind::SmallestWordRightmostWindow, 0},
            {Strategy::Kind::RandomWordRandomWindow, seed}};
}

/// Normal form by an explicit single-step strategy. Slower than the default
/// path; meant for cross-checking.
inline NcPoly normal_form(const NcPoly& p, const RewriteSystem& rs, const Strategy& strategy) {
    if (strategy.kind == Strategy::Kind::GreatestWordLeftmostWindow) {
        // Step-by-step form of the default path, kept literal so the probe
        // compares genuinely separate code paths.
        NcPoly cur = p;
        while (true) {
            const Word* target = nullptr;
            std::optional<Redex> redex;
            for (auto it = cur.rbegin(); it != cur.rend(); ++it) {
                if ((redex = rs.leftmost_redex(it->first))) {
                    target = &it->first;
                    break;
                }
            }
            if (!target) return cur;
            Word w = *target;
            LaurentPoly c = cur.coefficient(w);
            cur.add(w, -c);
            for (const auto& [rw, rc] : redex->rule->rhs)
                cur.add(detail::splice(w, redex->position, redex->rule->lhs.size(), rw), c * rc);
        }
    }
    std::mt19937_64 rng(strategy.seed);
    NcPoly cur = p;
    while (true) {
        std::vector<const Word*> reducible;
        for (const auto& [w, c] : cur)
            if (!rs.is_irreducible(w)) reducible.push_back(&w);
        if (reducible.empty()) return cur;
        const Word* target = nullptr;
        Redex redex{};
        if (strategy.kind == Strategy::Kind::SmallestWordRightmostWindow) {
            target = reducible.front();
            redex = rs.redexes(*target).back();
        } else {
            target = reducible[rng() % reducible.size()];
            auto all = rs.redexes(*target);
            redex = all[rng() % all.size()];
        }
        Word w = *target;
        LaurentPoly c = cur.coefficient(w);
        cur.add(w, -c);
        for (const auto& [rw, rc] : redex.rule->rhs)
            cur.add(detail::splice(w, redex.position, redex.rule->lhs.size(), rw), c * rc);
    }
}

/// Reduce both factors of every term and recombine.
inline TensorPoly tensor_normal_form(const TensorPoly& t, const RewriteSystem& rs) {
    std::map<Word, NcPoly> cache;
    auto nf = [&](const Word& w) -> const NcPoly& {
        auto it = cache.find(w);
        if (it == cache.end()) it = cache.emplace(w, normal_form(NcPoly::single(w), rs)).first;
        return it->second;
    };
    TensorPoly r;
    for (const auto& [pair, c] : t) r += c * tensor(nf(pair.first), nf(pair.second));
    return r;
}

/// All irreducible words of exactly the given degree, ascending.
inline std::vector<Word> enumerate_irreducible(int n, int degree, const RewriteSystem& rs) {
    std::vector<Word> out;
    if (degree < 0) return out;
    std::vector<Generator> cur;
    cur.reserve(degree);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == degree) {
            out.emplace_back(cur);
            return;
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                cur.emplace_back(i, j);
                if (!rs.has_redex_ending_at_back(cur)) self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    return out;
}

/// All irreducible words of degree 0..max_degree, ascending.
inline std::vector<Word> enumerate_irreducible_upto(int n, int max_degree, const RewriteSystem& rs) {
    std::vector<Word> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto part = enumerate_irreducible(n, d, rs);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// A place where two rule left-hand sides can both act on one word.
struct Ambiguity {
    enum class Kind { Overlap, Inclusion };
    Kind kind;
    std::size_t first;
    std::size_t second;
    Word word;
};

/// Every overlap (a proper suffix of one lhs equals a proper prefix of
/// another, the same rule included) and every inclusion (one lhs is a
/// subword of a different one). Works for arbitrary rule sets.
inline std::vector<Ambiguity> overlap_check(const RewriteSystem& rs) {
    std::vector<Ambiguity> out;
    const auto& rules = rs.rules();
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const auto la = rules[a].lhs.letters();
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const auto lb = rules[b].lhs.letters();
            if (a != b && lb.size() <= la.size()) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos)
                    if (std::equal(lb.begin(), lb.end(), la.begin() + pos))
                        out.push_back({Ambiguity::Kind::Inclusion, a, b, rules[a].lhs});
            }
            const std::size_t max_k = std::min(la.size(), lb.size());
            for (std::size_t k = 1; k < max_k; ++k) {
                if (std::equal(la.end() - k, la.end(), lb.begin()))
                    out.push_back({Ambiguity::Kind::Overlap, a, b, rules[a].lhs * Word::from_span(lb.subspan(k))});
            }
        }
    }
    return out;
}

/// True iff every strategy reduces p to the same normal form.
inline bool confluence_probe(const RewriteSystem& rs, const NcPoly& p, const std::vector<Strategy>& strategies) {
    std::vector<Strategy> distinct;
    for (const auto& s : strategies)
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    if (distinct.size() < 2) throw std::invalid_argument("confluence_probe needs at least two distinct strategies");
    const NcPoly reference = normal_form(p, rs, distinct[0]);
    for (std::size_t i = 1; i < distinct.size(); ++i)
        if (normal_form(p, rs, distinct[i]) != reference) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Seeded sampling. Raw engine output is used (not std distributions) so the
// streams are identical across standard libraries.

inline Word random_irreducible_word(int degree, const RewriteSystem& rs, std::mt19937_64& rng) {
    const int n = rs.n();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Generator> cur;
        bool stuck = false;
        while (static_cast<int>(cur.size()) < degree && !stuck) {
            std::vector<Generator> options;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    cur.emplace_back(i, j);
                    if (!rs.has_redex_ending_at_back(cur)) options.emplace_back(i, j);
                    cur.pop_back();
                }
            if (options.empty())
                stuck = true;
            else
                cur.push_back(options[rng() % options.size()]);
        }
        if (!stuck) return Word(std::move(cur));
    }
    throw ExhaustedSearch("no irreducible word of degree " + std::to_string(degree) + " found");
}

inline Word random_word(int n, int degree, std::mt19937_64& rng) {
    std::vector<Generator> letters;
    for (int k = 0; k < degree; ++k) letters.emplace_back(int(rng() % n) + 1, int(rng() % n) + 1);
    return Word(std::move(letters));
}

/// 1-4 terms, each a word of degree <= max_degree with coefficient
/// c*q^e, c in [-3, 3] \ {0}, e in [-2, 2].
inline NcPoly random_poly(int n, int max_degree, std::mt19937_64& rng) {
    NcPoly p;
    const int terms = int(rng() % 4) + 1;
    for (int t = 0; t < terms; ++t) {
        int degree = int(rng() % (max_degree + 1));
        Word w = random_word(n, degree, rng);
        long long c = (long long)(rng() % 3) + 1;
        if (rng() % 2) c = -c;
        int e = int(rng() % 5) - 2;
        p.add(w, LaurentPoly::monomial(c, e));
    }
    return p;
}

}  // namespace qleft
