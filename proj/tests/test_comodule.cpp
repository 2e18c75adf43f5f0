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

#include "test_util.hpp"

using namespace qleft;
using test::qp;

namespace {

const LaurentPoly kOne = LaurentPoly::one();

// rho(a) rho(b), left factors reduced in the exterior algebra and right
// factors by rs.
LambdaTensor rho_product(const LambdaTensor& a, const LambdaTensor& b, int n, const RewriteSystem& rs) {
    LambdaTensor out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            std::vector<int> z = pa.first.letters();
            z.insert(z.end(), pb.first.letters().begin(), pb.first.letters().end());
            auto left = reduce_zword(ZWord(z), n);
            if (!left) continue;
            for (const auto& [w, c] : normal_form(NcPoly::single(pa.second * pb.second), rs))
                out.add({left->word, w}, ca * cb * left->coefficient * c);
        }
    return out;
}

}  // namespace

TEST_CASE("exterior relations at n = 2", "[comodule]") {
    auto r = reduce_zword({2, 1}, 2);
    REQUIRE(r);
    CHECK(r->coefficient == qp(-1, -1));
    CHECK(r->word == ZWord{1, 2});
    CHECK_FALSE(reduce_zword({1, 1}, 2));
    CHECK_FALSE(reduce_zword({2, 2}, 2));
    CHECK(reduce_zword({1, 2}, 2)->coefficient == kOne);
    CHECK(reduce_zword({2}, 2)->word == ZWord{2});
    CHECK(reduce_zword({}, 2)->word == ZWord{});
    CHECK(to_string(lambda_normal_form(LambdaPoly::single(ZWord{2, 1}) + LambdaPoly::single(ZWord{1}), 2)) ==
          "-q^-1*z1 z2 + z1");
}

TEST_CASE("exterior coefficient is (-q)^-l on permutations", "[comodule][property]") {
    for (int n : {2, 3, 4})
        for (const auto& I : all_tuples(n, n)) {
            auto r = reduce_zword(ZWord(I.entries()), n);
            if (I.is_permutation()) {
                REQUIRE(r);
                CHECK(r->coefficient == neg_q_pow(-length_stat(I)));
                CHECK(r->word == ZWord(identity_tuple(n).entries()));
            } else {
                CHECK_FALSE(r);
            }
        }
}

TEST_CASE("exterior normal form is idempotent, linear and window independent", "[comodule][property]") {
    for (int n : {2, 3})
        for (int d : {n, n + 1}) {
            LambdaPoly sum;
            for (const auto& t : all_tuples(n, d)) {
                LambdaPoly p = LambdaPoly::single(ZWord(t.entries()), qp(1, length_stat(t)));
                LambdaPoly left = lambda_normal_form(p, n, WindowChoice::Leftmost);
                CHECK(left == lambda_normal_form(p, n, WindowChoice::Rightmost));
                CHECK(lambda_normal_form(left, n) == left);
                sum += p;
            }
            LambdaPoly sum_nf;
            for (const auto& t : all_tuples(n, d))
                sum_nf += lambda_normal_form(LambdaPoly::single(ZWord(t.entries()), qp(1, length_stat(t))), n);
            CHECK(lambda_normal_form(sum, n) == sum_nf);
        }
}

TEST_CASE("coaction on generators", "[comodule]") {
    const auto rs = build_rules(2, Mode::SLtilde);
    LambdaTensor expected;
    expected.add({ZWord{1}, Word{{1, 2}}}, kOne);
    expected.add({ZWord{2}, Word{{2, 2}}}, kOne);
    CHECK(rho_word({2}, 2, rs) == expected);
    CHECK(rho_word({}, 2, rs) == LambdaTensor::single({ZWord{}, Word{}}));
    CHECK_THROWS_AS(rho_word({1, 2, 1}, 2, rs), UnsupportedDegree);
}

TEST_CASE("coaction on top degree before reduction gives D_I", "[comodule]") {
    const auto bare = RewriteSystem::custom(2, {});
    for (const auto& I : all_tuples(2, 2)) {
        LambdaTensor expected;
        for (const auto& [w, c] : build_DI(2, I)) expected.add({ZWord{1, 2}, w}, c);
        CHECK(rho_word(ZWord(I.entries()), 2, bare) == expected);
    }
}

TEST_CASE("coaction on top degree in the quotient", "[comodule]") {
    const auto rs = build_rules(2, Mode::SLtilde);
    CHECK(rho_word({1, 2}, 2, rs) == LambdaTensor::single({ZWord{1, 2}, Word{}}));
    CHECK(rho_word({2, 1}, 2, rs) == LambdaTensor::single({ZWord{1, 2}, Word{}}, qp(-1, -1)));
    CHECK(rho_word({1, 1}, 2, rs).is_zero());
}

TEST_CASE("coaction is an algebra map", "[comodule][property]") {
    for (int n : {2, 3})
        for (Mode mode : {Mode::SLtilde, Mode::Mtilde}) {
            const auto rs = build_rules(n, mode);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto prod = rho_product(rho_word({i}, n, rs), rho_word({j}, n, rs), n, rs);
                    CHECK(prod == rho_word({i, j}, n, rs));
                }
        }
}

TEST_CASE("coaction respects the relations", "[comodule]") {
    for (int n : {2, 3})
        for (Mode mode : {Mode::SLtilde, Mode::Mtilde}) {
            const auto rs = build_rules(n, mode);
            CHECK(check_comodule_relations(n, rs).pass());
            CHECK(check_comodule_axioms(n, rs).pass());
        }
}

TEST_CASE("rendering", "[comodule]") {
    CHECK(ZWord{1, 2}.to_string() == "z1 z2");
    CHECK(ZWord{}.to_string() == "1");
    const auto rs = build_rules(2, Mode::SLtilde);
    CHECK(to_string(rho_word({2}, 2, rs)) == "z2 ⊗ X[2,2] + z1 ⊗ X[1,2]");
    CHECK(to_string(LambdaTensor{}) == "0");
}
