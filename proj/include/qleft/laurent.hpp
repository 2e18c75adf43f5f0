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
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qleft {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[q, q^-1].
///
/// Stored as a list of (exponent, coefficient) pairs sorted by ascending
/// exponent with no zero coefficients, so structural equality is value
/// equality.
class LaurentPoly {
   public:
    using Term = std::pair<int, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(BigInt constant) {
        if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
    }
    explicit LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

    static LaurentPoly monomial(BigInt coefficient, int exponent) {
        LaurentPoly p;
        if (!coefficient.is_zero()) p.terms_.emplace_back(exponent, std::move(coefficient));
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(1LL); }
    static LaurentPoly q_pow(int exponent) { return monomial(1, exponent); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }

    BigInt coefficient(int exponent) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return 0;
    }

    /// Substitute q = 1.
    BigInt at_one() const {
        BigInt sum = 0;
        for (const auto& [e, c] : terms_) sum += c;
        return sum;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        if (other.is_zero()) return *this;
        if (is_zero()) {
            terms_ = other.terms_;
            return *this;
        }
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto a = terms_.begin();
        auto b = other.terms_.begin();
        while (a != terms_.end() || b != other.terms_.end()) {
            if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else if (a == terms_.end() || b->first < a->first) {
                merged.push_back(*b++);
            } else {
                BigInt c = a->second + b->second;
                if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& other) { return *this += -other; }

    LaurentPoly& operator*=(const LaurentPoly& other) {
        *this = *this * other;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.is_monomial() || b.is_monomial()) {
            const LaurentPoly& m = a.is_monomial() ? a : b;
            const LaurentPoly& p = a.is_monomial() ? b : a;
            const auto& [me, mc] = m.terms_[0];
            r.terms_.reserve(p.terms_.size());
            for (const auto& [e, c] : p.terms_) r.terms_.emplace_back(e + me, c * mc);
            return r;
        }
        std::vector<Term> products;
        products.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) products.emplace_back(ea + eb, ca * cb);
        std::stable_sort(products.begin(), products.end(),
                         [](const Term& x, const Term& y) { return x.first < y.first; });
        for (auto& t : products) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first)
                r.terms_.back().second += t.second;
            else
                r.terms_.push_back(std::move(t));
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "c_k*q^k + ..." with exponents descending; "0" for zero.
    std::string to_string() const { return render(false); }
    std::string to_latex() const { return render(true); }

   private:
    std::string render(bool latex) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = abs(c);
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << (latex ? " " : "*");
            os << 'q';
            if (e != 1) {
                if (latex)
                    os << "^{" << e << '}';
                else
                    os << '^' << e;
            }
        }
        return os.str();
    }

    std::vector<Term> terms_;
};

/// (-q)^k
inline LaurentPoly neg_q_pow(int k) { return LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, k); }

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace qleft
