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

#include "test_util.hpp"

using namespace qleft;
using test::poly;
using test::qp;

namespace {

std::size_t error_position(const std::string& text, int n) {
    try {
        parse_poly(text, n);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no ParseError for: " << text);
    return 0;
}

}  // namespace

TEST_CASE("parse examples", "[parser]") {
    CHECK(parse_poly("X[2,1]*X[1,1]", 2) == NcPoly::single(Word{{2, 1}, {1, 1}}));
    CHECK(parse_poly("q*X[1,2]*X[2,1] + 1", 2) ==
          poly({{qp(1, 1), Word{{1, 2}, {2, 1}}}, {LaurentPoly::one(), Word{}}}));
    CHECK(parse_poly("q^-2 - 3", 2) == constant_poly(qp(1, -2) - qp(3, 0)));
    CHECK(parse_poly("(X[1,1] + X[2,2])^2", 2) ==
          parse_poly("X[1,1]*X[1,1] + X[1,1]*X[2,2] + X[2,2]*X[1,1] + X[2,2]*X[2,2]", 2));
    CHECK(parse_poly("  2 * q ^ 3 ", 3) == constant_poly(qp(2, 3)));
    CHECK(parse_poly("007*X[01,2]", 2) == NcPoly::single(Word{{1, 2}}, qp(7, 0)));
    CHECK(parse_poly("-X[1,1]", 2) == NcPoly::single(Word{{1, 1}}, qp(-1, 0)));
    CHECK(parse_poly("X[1,1] - X[1,1]", 2).is_zero());
    CHECK(parse_poly("123456789012345678901234567890", 2) ==
          constant_poly(LaurentPoly(BigInt("123456789012345678901234567890"))));
}

TEST_CASE("underscore generator alias", "[parser]") {
    CHECK(parse_poly("X_{12}*X_{21}", 2) == parse_poly("X[1,2]*X[2,1]", 2));
    CHECK(error_position("X_{123}", 3) == 5);
    CHECK_THROWS_AS(parse_poly("X_12", 2), ParseError);
}

TEST_CASE("parse errors carry positions", "[parser]") {
    CHECK(error_position("X[3,1]", 2) == 0);
    CHECK(error_position("X[1,1] + X[1,3]", 2) == 9);
    CHECK(error_position("X[1,1", 2) == 5);
    CHECK(error_position("X[1,1]^-1", 2) == 6);
    CHECK(error_position("q^1001", 2) == 1);
    CHECK(error_position("1 +", 2) == 3);
    CHECK(error_position("(q", 2) == 2);
    CHECK(error_position("q q", 2) == 2);
    CHECK(error_position("", 2) == 0);
    CHECK(error_position("y", 2) == 0);
    try {
        parse_poly("X[1,4]", 3);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("n = 3") != std::string::npos);
    }
}

TEST_CASE("rendered polynomials parse back", "[parser][property]") {
    std::mt19937_64 rng(123);
    for (int n : {2, 3}) {
        const auto rs = build_rules(n, Mode::SLtilde);
        for (int trial = 0; trial < 200; ++trial) {
            NcPoly p = random_poly(n, 4, rng);
            if (trial % 2) p = normal_form(p, rs);
            REQUIRE(parse_poly(to_string(p), n) == p);
        }
        for (const auto& r : rs.rules()) REQUIRE(parse_poly(to_string(r.rhs), n) == r.rhs);
    }
}

TEST_CASE("garbage raises only ParseError", "[parser][fuzz]") {
    const std::string alphabet = "X[],_{}q0123456789+-*^() \t";
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        const std::size_t len = rng() % 16;
        for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
        try {
            parse_poly(text, 3);
        } catch (const ParseError& e) {
            CHECK(e.position() <= text.size());
        }
    }
}
