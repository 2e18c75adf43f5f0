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
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "freealg.hpp"

namespace qleft {

/// A k-tuple of indices in [n].
class IndexTuple {
   public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {}
    IndexTuple(std::initializer_list<int> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Entries pairwise distinct and drawn from [size()].
    bool is_permutation() const {
        std::vector<bool> seen(entries_.size() + 1, false);
        for (int e : entries_) {
            if (e < 1 || e > static_cast<int>(entries_.size()) || seen[e]) return false;
            seen[e] = true;
        }
        return true;
    }

    bool within(int n) const {
        return std::all_of(entries_.begin(), entries_.end(), [n](int e) { return e >= 1 && e <= n; });
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(entries_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

   private:
    std::vector<int> entries_;
};

inline IndexTuple identity_tuple(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return IndexTuple(std::move(e));
}

/// All of [n]^k in lexicographic order.
inline std::vector<IndexTuple> all_tuples(int n, int k) {
    std::vector<IndexTuple> out;
    std::vector<int> cur(k, 1);
    while (true) {
        out.emplace_back(cur);
        int pos = k;
        while (pos > 0 && cur[pos - 1] == n) cur[--pos] = 1;
        if (pos == 0) break;
        ++cur[pos - 1];
    }
    return out;
}

/// The permutations of [n] in one-line notation, lexicographic order.
inline std::vector<IndexTuple> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<IndexTuple> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Inversion count #{a < b : t_a > t_b}. Equal neighbours never need to be
/// swapped, so this is the least number of adjacent interchanges that sort t.
inline int length_stat(const IndexTuple& t) {
    int inv = 0;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            if (t[a] > t[b]) ++inv;
    return inv;
}

namespace detail {
inline void require_tuple(int n, const IndexTuple& I) {
    if (n < 1) throw MalformedInput("n must be positive");
    if (static_cast<int>(I.size()) != n || !I.within(n))
        throw MalformedInput("index tuple " + I.to_string() + " is not in [" + std::to_string(n) + "]^" +
                             std::to_string(n));
}
}  // namespace detail

/// D_I = sum over pi in S_n of (-q)^(-l(pi)) X[pi_1, i_1] ... X[pi_n, i_n],
/// unreduced, n! terms.
inline NcPoly build_DI(int n, const IndexTuple& I) {
    detail::require_tuple(n, I);
    NcPoly r;
    std::vector<Generator> letters(n);
    for (const auto& pi : permutations(n)) {
        for (int a = 0; a < n; ++a) letters[a] = Generator(pi[a], I[a]);
        r.add(Word(letters), neg_q_pow(-length_stat(pi)));
    }
    return r;
}

/// The quantum determinant D = D_(1,...,n).
inline NcPoly build_D(int n) { return build_DI(n, identity_tuple(n)); }

/// E_I = D_I - delta(I in S_n) (-q)^(-l(I)) D.
inline NcPoly build_EI(int n, const IndexTuple& I) {
    NcPoly e = build_DI(n, I);
    if (I.is_permutation()) e -= neg_q_pow(-length_stat(I)) * build_D(n);
    return e;
}

/// Column-indexed quantum determinant of the rows x cols submatrix of X:
/// sum over pi in S_m of (-q)^(-l(pi)) a[pi_1, 1] ... a[pi_m, m].
inline NcPoly det_q(const IndexTuple& rows, const IndexTuple& cols) {
    if (rows.size() != cols.size() || rows.size() == 0)
        throw MalformedInput("det_q needs nonempty row and column sets of equal size");
    auto increasing = [](const IndexTuple& t) {
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] < 1 || (i > 0 && t[i] <= t[i - 1])) return false;
        return true;
    };
    if (!increasing(rows) || !increasing(cols))
        throw MalformedInput("det_q index sets must be strictly increasing: rows " + rows.to_string() +
                             ", cols " + cols.to_string());
    const int m = static_cast<int>(rows.size());
    NcPoly r;
    std::vector<Generator> letters(m);
    for (const auto& pi : permutations(m)) {
        for (int a = 0; a < m; ++a) letters[a] = Generator(rows[pi[a] - 1], cols[a]);
        r.add(Word(letters), neg_q_pow(-length_stat(pi)));
    }
    return r;
}

/// Entry (i, j) of the quantum adjoint: (-q)^(j-i) det_q of X with row j
/// and column i deleted.
inline NcPoly adjoint_entry(int n, int i, int j) {
    if (n < 2) throw MalformedInput("adjoint_entry needs n >= 2");
    if (i < 1 || i > n || j < 1 || j > n)
        throw MalformedInput("adjoint index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for n = " + std::to_string(n));
    std::vector<int> rows, cols;
    for (int k = 1; k <= n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
    }
    return neg_q_pow(j - i) * det_q(IndexTuple(rows), IndexTuple(cols));
}

}  // namespace qleft
