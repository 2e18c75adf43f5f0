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

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "freealg.hpp"

namespace qleft {

/// Syntax tree of the expression language
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := atom ("^" signed-int)?
///   atom   := "X[" int "," int "]" | "X_{" digit digit "}" | "q" | unsigned-int | "(" expr ")"
struct Expr {
    enum class Kind { Sum, Difference, Product, Power, Negate, Generator, QSymbol, Integer };

    Kind kind = Kind::Integer;
    std::vector<Expr> children;
    int row = 0;
    int col = 0;
    int exponent = 0;
    BigInt value = 0;
    std::size_t position = 0;
};

namespace detail {

class ExprParser {
   public:
    static constexpr int kMaxExponent = 1000;

    ExprParser(std::string_view text, int n) : text_(text), n_(n) {}

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    Expr node(Expr::Kind k, std::size_t at) {
        Expr e;
        e.kind = k;
        e.position = at;
        return e;
    }

    Expr expr() {
        skip_ws();
        const std::size_t start = pos_;
        Expr lhs;
        if (accept('-')) {
            lhs = node(Expr::Kind::Negate, start);
            lhs.children.push_back(term());
        } else {
            accept('+');
            lhs = term();
        }
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            Expr::Kind k;
            if (accept('+'))
                k = Expr::Kind::Sum;
            else if (accept('-'))
                k = Expr::Kind::Difference;
            else
                break;
            Expr e = node(k, at);
            e.children.push_back(std::move(lhs));
            e.children.push_back(term());
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            if (!accept('*')) break;
            Expr e = node(Expr::Kind::Product, at);
            e.children.push_back(std::move(lhs));
            e.children.push_back(factor());
            lhs = std::move(e);
        }
        return lhs;
    }

    Expr factor() {
        Expr base = atom();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
        BigInt magnitude = unsigned_int("exponent");
        if (magnitude > kMaxExponent) fail_at("exponent too large (limit " + std::to_string(kMaxExponent) + ")", at);
        int exp = magnitude.convert_to<int>();
        if (negative) exp = -exp;
        if (exp < 0 && base.kind != Expr::Kind::QSymbol) fail_at("negative power is only allowed on q", at);
        Expr e = node(Expr::Kind::Power, at);
        e.exponent = exp;
        e.children.push_back(std::move(base));
        return e;
    }

    BigInt unsigned_int(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        // cpp_int reads a leading 0 as an octal prefix.
        std::size_t first = start;
        while (first + 1 < pos_ && text_[first] == '0') ++first;
        return BigInt(std::string(text_.substr(first, pos_ - first)));
    }

    int index(const char* what) {
        BigInt v = unsigned_int(what);
        if (v > 1000) return 1001;
        return v.convert_to<int>();
    }

    void check_indices(int row, int col, std::size_t at) {
        if (row < 1 || row > n_ || col < 1 || col > n_)
            fail_at("generator index (" + std::to_string(row) + "," + std::to_string(col) + ") out of range for n = " +
                        std::to_string(n_),
                    at);
    }

    Expr atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 'X') {
            ++pos_;
            Expr e = node(Expr::Kind::Generator, at);
            if (pos_ < text_.size() && text_[pos_] == '_') {
                ++pos_;
                if (pos_ >= text_.size() || text_[pos_] != '{') fail("expected '{' after 'X_'");
                ++pos_;
                int digits[2];
                for (int& d : digits) {
                    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                        fail("expected a single digit index in X_{ij}");
                    d = text_[pos_++] - '0';
                }
                if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}' (X_{ij} takes single digits)");
                ++pos_;
                e.row = digits[0];
                e.col = digits[1];
            } else {
                expect('[');
                e.row = index("row index");
                expect(',');
                e.col = index("column index");
                expect(']');
            }
            check_indices(e.row, e.col, at);
            return e;
        }
        if (c == 'q') {
            ++pos_;
            return node(Expr::Kind::QSymbol, at);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e = node(Expr::Kind::Integer, at);
            e.value = unsigned_int("integer");
            return e;
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            expect(')');
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text, int n) { return detail::ExprParser(text, n).parse(); }

inline NcPoly evaluate(const Expr& e, int n) {
    switch (e.kind) {
        case Expr::Kind::Integer: return constant_poly(LaurentPoly(e.value));
        case Expr::Kind::QSymbol: return constant_poly(LaurentPoly::q_pow(1));
        case Expr::Kind::Generator:
            if (e.row < 1 || e.row > n || e.col < 1 || e.col > n)
                throw ParseError("generator index out of range for n = " + std::to_string(n), e.position);
            return generator_poly(e.row, e.col);
        case Expr::Kind::Negate: return -evaluate(e.children[0], n);
        case Expr::Kind::Sum: return evaluate(e.children[0], n) + evaluate(e.children[1], n);
        case Expr::Kind::Difference: return evaluate(e.children[0], n) - evaluate(e.children[1], n);
        case Expr::Kind::Product: return evaluate(e.children[0], n) * evaluate(e.children[1], n);
        case Expr::Kind::Power: {
            const Expr& base = e.children[0];
            if (base.kind == Expr::Kind::QSymbol) return constant_poly(LaurentPoly::q_pow(e.exponent));
            if (e.exponent < 0) throw ParseError("negative power is only allowed on q", e.position);
            const NcPoly b = evaluate(base, n);
            NcPoly acc = constant_poly(LaurentPoly::one());
            for (int k = 0; k < e.exponent; ++k) acc = acc * b;
            return acc;
        }
    }
    return {};
}

/// parse + evaluate.
inline NcPoly parse_poly(std::string_view text, int n) { return evaluate(parse(text, n), n); }

}  // namespace qleft
