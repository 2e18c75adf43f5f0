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

#include <map>
#include <utility>

#include "laurent.hpp"

namespace qleft {

/// Finite Z[q, q^-1]-combination of basis keys, kept canonical: no key maps
/// to a zero coefficient. Iteration is in ascending key order.
template <class Key>
class LinearCombination {
   public:
    using key_type = Key;
    using map_type = std::map<Key, LaurentPoly>;
    using const_iterator = typename map_type::const_iterator;
    using const_reverse_iterator = typename map_type::const_reverse_iterator;

    LinearCombination() = default;

    static LinearCombination single(Key key, LaurentPoly coefficient = LaurentPoly::one()) {
        LinearCombination r;
        r.add(std::move(key), std::move(coefficient));
        return r;
    }

    void add(const Key& key, const LaurentPoly& coefficient) {
        if (coefficient.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& key, LaurentPoly&& coefficient) {
        if (coefficient.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(coefficient));
        } else {
            it->second += coefficient;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const map_type& terms() const noexcept { return terms_; }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const_reverse_iterator rbegin() const { return terms_.rbegin(); }
    const_reverse_iterator rend() const { return terms_.rend(); }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    LinearCombination operator-() const {
        LinearCombination r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }

    friend LinearCombination operator*(const LaurentPoly& s, const LinearCombination& a) {
        LinearCombination r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, s * c);
        return r;
    }

    /// Apply a function to every coefficient (e.g. q -> 1 substitution).
    template <class F>
    LinearCombination map_coefficients(F&& f) const {
        LinearCombination r;
        for (const auto& [k, c] : terms_) r.add(k, f(c));
        return r;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

   private:
    map_type terms_;
};

}  // namespace qleft
