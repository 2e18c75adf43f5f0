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

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace qleft;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qleft");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("relations", "[cli]") {
    auto r = run_cli({"--n", "2", "relations"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "X[2,1]*X[1,1] = q*X[1,1]*X[2,1]\n"
          "X[2,1]*X[1,2] = q*X[1,1]*X[2,2] - q\n"
          "X[2,2]*X[1,1] = q*X[1,2]*X[2,1] + 1\n"
          "X[2,2]*X[1,2] = q*X[1,2]*X[2,2]\n");
    CHECK(line_count(run_cli({"--n", "3", "relations"}).out) == 27);
    CHECK(line_count(run_cli({"--n", "3", "--mode", "m", "relations"}).out) == 26);
    CHECK(run_cli({"--n", "2", "--output", "latex", "relations"}).out.find("X_{21} X_{11} = q X_{11} X_{21}") == 0);

    auto j = nlohmann::json::parse(run_cli({"--n", "2", "--output", "json", "relations"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["rules"].size() == 4);
    CHECK(j["rules"][2]["rhs"] == "q*X[1,2]*X[2,1] + 1");
    CHECK(j["rules"][2]["I"] == nlohmann::json::array({2, 1}));
}

TEST_CASE("reduce and eval", "[cli]") {
    auto r = run_cli({"--n", "2", "reduce", "X[2,2]*X[1,1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "q*X[1,2]*X[2,1] + 1\n");
    CHECK(run_cli({"reduce", "X[1,1]*X[2,2] - q^-1*X[2,1]*X[1,2]"}).out == "1\n");
    CHECK(run_cli({"--mode", "m", "reduce", "X[1,1]*X[2,2] - q^-1*X[2,1]*X[1,2]"}).out ==
          "-q^-1*X[2,1]*X[1,2] + X[1,1]*X[2,2]\n");
    CHECK(run_cli({"eval", "(X[1,1] + 1)^2"}).out == "X[1,1]*X[1,1] + 2*X[1,1] + 1\n");
    auto j = nlohmann::json::parse(run_cli({"--output", "json", "reduce", "X[2,1]*X[1,1]"}).out);
    CHECK(j["normal_form"] == "q*X[1,1]*X[2,1]");
    CHECK(j["input"] == "X[2,1]*X[1,1]");
}

TEST_CASE("usage and parse errors exit with 2", "[cli]") {
    auto r = run_cli({"--n", "2", "reduce", "X[3,1]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 0") != std::string::npos);
    CHECK(run_cli({"reduce", "X[1,1"}).code == 2);
    CHECK(run_cli({"--n", "1", "relations"}).code == 2);
    CHECK(run_cli({"--mode", "gl", "relations"}).code == 2);
    CHECK(run_cli({"verify", "nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--output", "yaml", "relations"}).code == 2);
}

TEST_CASE("verify", "[cli]") {
    auto all = run_cli({"--n", "2", "verify", "all"});
    CHECK(all.code == 0);
    CHECK(all.out.find("[FAIL]") == std::string::npos);
    CHECK(run_cli({"--n", "3", "verify", "right-antipode-fails"}).code == 0);
    auto diamond = run_cli({"--n", "4", "verify", "diamond"});
    CHECK(diamond.code == 0);
    CHECK(diamond.out.find("0 ambiguities among 256 rules") != std::string::npos);
    CHECK(run_cli({"--n", "3", "--mode", "m", "verify", "coideal"}).code == 0);
    CHECK(run_cli({"--n", "3", "--mode", "m", "verify", "left-antipode"}).code == 0);
}

TEST_CASE("json reports are deterministic", "[cli]") {
    std::vector<std::string> args{"--n", "2", "--output", "json", "--seed", "5", "--samples", "20", "verify", "all"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["status"] == "pass");
    for (const auto& r : j["reports"]) {
        CHECK(r["schema"] == 1);
        CHECK(r.contains("items"));
        CHECK(r["status"] == "pass");
    }
    auto single = nlohmann::json::parse(run_cli({"--output", "json", "verify", "grouplike"}).out);
    CHECK(single["check"] == "grouplike");
}
