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

#include <catch_amalgamated.hpp>

#include <random>
#include <tuple>

#include "test_util.hpp"

using namespace qleft;
using test::poly;
using test::qp;

namespace {

using Triple = std::tuple<Word, Word, Word>;
using TriplePoly = LinearCombination<Triple>;

// (Delta (x) I) Delta(w) and (I (x) Delta) Delta(w), flattened to triples.
TriplePoly coassoc_left(const Word& w, int n) {
    TriplePoly r;
    for (const auto& [pair, c] : coproduct_word(w, n))
        for (const auto& [inner, c2] : coproduct_word(pair.first, n))
            r.add(Triple{inner.first, inner.second, pair.second}, c * c2);
    return r;
}

TriplePoly coassoc_right(const Word& w, int n) {
    TriplePoly r;
    for (const auto& [pair, c] : coproduct_word(w, n))
        for (const auto& [inner, c2] : coproduct_word(pair.second, n))
            r.add(Triple{pair.first, inner.first, inner.second}, c * c2);
    return r;
}

std::vector<Word> all_words(int n, int degree) {
    std::vector<Word> out{Word{}};
    for (int d = 0; d < degree; ++d) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) next.push_back(w * Word::generator(i, j));
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("word order", "[freealg]") {
    CHECK(word_cmp(Word{{1, 1}, {2, 2}}, Word{{2, 1}, {1, 2}}) == std::strong_ordering::less);
    CHECK(word_cmp(Word{{1, 1}}, Word{{1, 1}, {1, 1}}) == std::strong_ordering::less);
    CHECK(word_cmp(Word{{3, 2}, {2, 1}, {1, 2}}, Word{{1, 2}, {2, 1}, {3, 2}}) == std::strong_ordering::greater);
    CHECK(word_cmp(Word{}, Word{}) == std::strong_ordering::equal);
}

TEST_CASE("word order is compatible with multiplication", "[freealg][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Word u = random_word(3, int(rng() % 4), rng);
        Word v = random_word(3, int(rng() % 4), rng);
        Word w = random_word(3, int(rng() % 3), rng);
        if (v < u) std::swap(u, v);
        if (u == v) continue;
        CHECK(w * u < w * v);
        CHECK(u * w < v * w);
    }
}

TEST_CASE("noncommutative multiplication", "[freealg]") {
    CHECK(generator_poly(2, 1) * generator_poly(1, 2) == NcPoly::single(Word{{2, 1}, {1, 2}}));
    NcPoly s = generator_poly(1, 1) + generator_poly(1, 2);
    CHECK(s * test::one() == s);
    CHECK((qp(1, 1) * generator_poly(1, 1)) * (qp(1, -1) * generator_poly(2, 2)) ==
          NcPoly::single(Word{{1, 1}, {2, 2}}));
}

TEST_CASE("coproduct of words", "[freealg]") {
    TensorPoly x11;
    x11.add({Word{{1, 1}}, Word{{1, 1}}}, LaurentPoly::one());
    x11.add({Word{{1, 2}}, Word{{2, 1}}}, LaurentPoly::one());
    CHECK(coproduct_word(Word{{1, 1}}, 2) == x11);

    CHECK(coproduct_word(Word{}, 2) == TensorPoly::single(WordPair{}));

    // Middle-index sequences (j1, j2) in {1,2}^2 for X11 X22.
    TensorPoly expected;
    expected.add({Word{{1, 1}, {2, 1}}, Word{{1, 1}, {1, 2}}}, LaurentPoly::one());
    expected.add({Word{{1, 1}, {2, 2}}, Word{{1, 1}, {2, 2}}}, LaurentPoly::one());
    expected.add({Word{{1, 2}, {2, 1}}, Word{{2, 1}, {1, 2}}}, LaurentPoly::one());
    expected.add({Word{{1, 2}, {2, 2}}, Word{{2, 1}, {2, 2}}}, LaurentPoly::one());
    CHECK(coproduct_word(Word{{1, 1}, {2, 2}}, 2) == expected);
}

TEST_CASE("counit of words", "[freealg]") {
    CHECK(counit_word(Word{{1, 1}, {2, 2}}) == LaurentPoly::one());
    CHECK(counit_word(Word{{1, 2}}).is_zero());
    CHECK(counit_word(Word{}) == LaurentPoly::one());
    CHECK(counit(qp(3, 1) * generator_poly(1, 1) + generator_poly(2, 1)) == qp(3, 1));
}

TEST_CASE("tensor maps", "[freealg]") {
    TensorPoly t = TensorPoly::single({Word{{1, 1}}, Word{{1, 2}}});
    CHECK(tensor_map(t, identity_word_map, identity_word_map) == t);
    CHECK(swap_factors(t) == TensorPoly::single({Word{{1, 2}}, Word{{1, 1}}}));
    auto zero = [](const Word&) { return NcPoly{}; };
    CHECK(tensor_map(t, zero, identity_word_map).is_zero());
}

TEST_CASE("free bialgebra: coassociativity through degree 3", "[freealg][property]") {
    for (int n : {2, 3})
        for (int d = 0; d <= 3; ++d)
            for (const auto& w : all_words(n, d)) REQUIRE(coassoc_left(w, n) == coassoc_right(w, n));
}

TEST_CASE("free bialgebra: counit axioms", "[freealg][property]") {
    for (int n : {2, 3})
        for (int d = 0; d <= 3; ++d)
            for (const auto& w : all_words(n, d)) {
                NcPoly left, right;
                for (const auto& [pair, c] : coproduct_word(w, n)) {
                    left += (c * counit_word(pair.first)) * NcPoly::single(pair.second);
                    right += (c * counit_word(pair.second)) * NcPoly::single(pair.first);
                }
                REQUIRE(left == NcPoly::single(w));
                REQUIRE(right == NcPoly::single(w));
            }
}

TEST_CASE("coproduct is multiplicative", "[freealg][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + int(rng() % 2);
        Word u = random_word(n, int(rng() % 3), rng);
        Word v = random_word(n, int(rng() % 3), rng);
        CHECK(coproduct_word(u * v, n) == tensor_mul(coproduct_word(u, n), coproduct_word(v, n)));
    }
}

TEST_CASE("rendering", "[freealg]") {
    CHECK(to_string(Word{{1, 1}, {2, 2}}) == "X[1,1] X[2,2]");
    CHECK(to_string(Word{}) == "1");
    CHECK(to_string(Word{{1, 2}}, Format::Latex) == "X_{12}");
    NcPoly p = poly({{qp(1, 1), Word{{1, 2}, {2, 1}}}, {LaurentPoly::one(), Word{}}});
    CHECK(to_string(p) == "q*X[1,2]*X[2,1] + 1");
    CHECK(to_string(p, Format::Latex) == "q X_{12} X_{21} + 1");
    NcPoly d = poly({{LaurentPoly::one(), Word{{1, 1}, {2, 2}}}, {qp(-1, -1), Word{{2, 1}, {1, 2}}}});
    CHECK(to_string(d) == "-q^-1*X[2,1]*X[1,2] + X[1,1]*X[2,2]");
    NcPoly mixed = (qp(1, 1) + qp(1, 0)) * generator_poly(1, 1);
    CHECK(to_string(mixed) == "(q + 1)*X[1,1]");
    CHECK(to_string(NcPoly{}) == "0");
}
