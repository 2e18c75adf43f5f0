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
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <qleft/qleft.hpp>

namespace qleft::cli {

struct RunConfig {
    int n = 2;
    Mode mode = Mode::SLtilde;
    std::string output = "text";  // text | json | latex
    int degree = 3;
    bool degree_given = false;
    int samples = 100;
    std::uint64_t seed = 0;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"left-antipode", "right-antipode-fails", "grouplike", "coideal",
                                                   "comodule",      "star",                 "diamond",   "confluence",
                                                   "witnesses",     "all"};
    return names;
}

inline Format format_of(const RunConfig& cfg) { return cfg.output == "latex" ? Format::Latex : Format::Text; }

inline std::string cmd_relations(const RunConfig& cfg) {
    const RewriteSystem rs = build_rules(cfg.n, cfg.mode);
    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["n"] = cfg.n;
        j["mode"] = mode_name(cfg.mode);
        j["rules"] = nlohmann::ordered_json::array();
        for (const auto& r : rs.rules())
            j["rules"].push_back({{"I", r.index.entries()},
                                  {"lhs", to_string(NcPoly::single(r.lhs))},
                                  {"rhs", to_string(r.rhs)}});
        return j.dump(2) + "\n";
    }
    const Format fmt = format_of(cfg);
    std::string out;
    for (const auto& r : rs.rules()) out += to_string(NcPoly::single(r.lhs), fmt) + " = " + to_string(r.rhs, fmt) + "\n";
    return out;
}

/// Shared by reduce and eval.
inline std::string render_poly_result(const RunConfig& cfg, const std::string& expr, const NcPoly& p,
                                      const char* field) {
    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["n"] = cfg.n;
        j["mode"] = mode_name(cfg.mode);
        j["input"] = expr;
        j[field] = to_string(p);
        return j.dump(2) + "\n";
    }
    return to_string(p, format_of(cfg)) + "\n";
}

inline std::string cmd_reduce(const RunConfig& cfg, const std::string& expr) {
    const RewriteSystem rs = build_rules(cfg.n, cfg.mode);
    return render_poly_result(cfg, expr, normal_form(parse_poly(expr, cfg.n), rs), "normal_form");
}

inline std::string cmd_eval(const RunConfig& cfg, const std::string& expr) {
    return render_poly_result(cfg, expr, parse_poly(expr, cfg.n), "value");
}

/// Exhaustive degree for the left-antipode check when --degree is not given:
/// 3 at n = 2, 2 at n = 3, generators only beyond that.
inline int left_antipode_degree(const RunConfig& cfg) {
    if (cfg.degree_given) return cfg.degree;
    return cfg.n == 2 ? 3 : cfg.n == 3 ? 2 : 1;
}

namespace detail {

inline Report diamond_report(const RunConfig& cfg) {
    const RewriteSystem rs = build_rules(cfg.n, cfg.mode);
    const auto found = overlap_check(rs);
    Report r{"diamond", cfg.n, mode_name(cfg.mode), {}, {}};
    r.items.push_back({"pairwise overlap/inclusion scan of " + std::to_string(rs.rules().size()) + " rules",
                       "0 ambiguities", std::to_string(found.size()) + " ambiguities", found.empty()});
    for (const auto& a : found)
        r.items.push_back({to_string(rs.rules()[a.first].lhs) + " / " + to_string(rs.rules()[a.second].lhs),
                           "no ambiguity",
                           (a.kind == Ambiguity::Kind::Overlap ? "overlap on " : "inclusion in ") + to_string(a.word),
                           false});
    r.summary = std::to_string(found.size()) + " ambiguities among " + std::to_string(rs.rules().size()) + " rules";
    return r;
}

inline Report left_antipode_report(const RunConfig& cfg) {
    if (cfg.mode == Mode::Mtilde) return check_adjoint_product(cfg.n, Mode::Mtilde);
    const RewriteSystem rs = build_rules(cfg.n, Mode::SLtilde);
    const int degree = left_antipode_degree(cfg);
    std::vector<Word> words = enumerate_irreducible_upto(cfg.n, degree, rs);
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.samples; ++k) {
        int d = int(rng() % (degree + 2)) + 1;
        words.push_back(random_irreducible_word(d, rs, rng));
    }
    Report r = check_left_antipode(cfg.n, words);
    r.summary += " (exhaustive to degree " + std::to_string(degree) + ", " + std::to_string(cfg.samples) +
                 " samples of degree <= " + std::to_string(degree + 2) + ")";
    return r;
}

inline Report confluence_report(const RunConfig& cfg) {
    const RewriteSystem rs = build_rules(cfg.n, cfg.mode);
    const int max_degree = cfg.degree + 2;
    std::mt19937_64 rng(cfg.seed);
    const auto strategies = standard_strategies(cfg.seed);
    Report r{"confluence", cfg.n, mode_name(cfg.mode), {}, {}};
    for (int k = 0; k < cfg.samples; ++k) {
        NcPoly p = random_poly(cfg.n, max_degree, rng);
        bool ok = confluence_probe(rs, p, strategies);
        r.items.push_back({to_string(p), "strategies agree", ok ? "strategies agree" : "strategies disagree", ok});
    }
    r.summary = std::to_string(cfg.samples - r.failures()) + "/" + std::to_string(cfg.samples) +
                " random polynomials of degree <= " + std::to_string(max_degree) + " reduce identically under " +
                std::to_string(strategies.size()) + " strategies";
    return r;
}

inline Report witnesses_report(const RunConfig& cfg) {
    Report r{"witnesses", cfg.n, "sl", {}, {}};
    try {
        auto w = antimorphism_witness(cfg.n, cfg.n);
        r.items.push_back({"S(uv) vs S(v)S(u) for u = " + to_string(w.u) + ", v = " + to_string(w.v), "different",
                           to_string(w.s_of_uv) + " vs " + to_string(w.s_v_s_u), true});
    } catch (const ExhaustedSearch& e) {
        r.items.push_back({"S(uv) vs S(v)S(u)", "different", e.what(), false});
    }
    auto c = coalgebra_antimorphism_check(cfg.n);
    r.items.push_back({"Delta(S(X[1,1]^2)) vs (S(x)S)(swap(Delta(X[1,1]^2)))", "different",
                       to_string(c.delta_s) + " vs " + to_string(c.s_s_swap), c.fails});
    r.summary = "S is neither an algebra nor a coalgebra antimorphism";
    if (!r.pass()) r.summary = "witness search incomplete";
    return r;
}

}  // namespace detail

inline std::vector<Report> run_check(const RunConfig& cfg, const std::string& check) {
    if (check == "all") {
        std::vector<Report> all;
        for (const auto& name : check_names()) {
            if (name == "all") continue;
            auto part = run_check(cfg, name);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (check == "left-antipode") return {detail::left_antipode_report(cfg)};
    if (check == "right-antipode-fails") return {check_right_antipode_fails(cfg.n)};
    if (check == "grouplike") return {check_grouplike_report(cfg.n, cfg.mode)};
    if (check == "coideal") return {check_coideal(cfg.n)};
    if (check == "comodule") {
        const RewriteSystem rs = build_rules(cfg.n, cfg.mode);
        return {check_comodule_relations(cfg.n, rs), check_comodule_axioms(cfg.n, rs)};
    }
    if (check == "star") return {check_star_report(cfg.n, cfg.degree, cfg.mode)};
    if (check == "diamond") return {detail::diamond_report(cfg)};
    if (check == "confluence") return {detail::confluence_report(cfg)};
    if (check == "witnesses") return {detail::witnesses_report(cfg)};
    throw CLI::ValidationError("unknown check '" + check + "'");
}

struct VerifyOutcome {
    int exit_code;
    std::string output;
};

inline VerifyOutcome cmd_verify(const RunConfig& cfg, const std::string& check) {
    std::vector<Report> reports = run_check(cfg, check);
    bool pass = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass(); });
    std::string out;
    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        if (reports.size() == 1) {
            j = to_json(reports[0]);
        } else {
            j["schema"] = kReportSchema;
            j["check"] = check;
            j["n"] = cfg.n;
            j["mode"] = mode_name(cfg.mode);
            j["status"] = pass ? "pass" : "fail";
            j["reports"] = nlohmann::ordered_json::array();
            for (const auto& r : reports) j["reports"].push_back(to_json(r));
        }
        out = j.dump(2) + "\n";
    } else {
        for (const auto& r : reports) out += render_text(r);
        std::size_t failed = std::count_if(reports.begin(), reports.end(), [](const Report& r) { return !r.pass(); });
        out += pass ? "all " + std::to_string(reports.size()) + " checks passed\n"
                    : std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks failed\n";
    }
    return {pass ? 0 : 1, out};
}

/// Entry point. Exit codes: 0 success, 1 a verification failed (or errored),
/// 2 usage or expression error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"qleft: one-sided quantum groups, normal forms and antipode verification"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string mode = "sl";
    app.add_option("--n", cfg.n, "matrix size n")->check(CLI::Range(2, RewriteSystem::kMaxN));
    app.add_option("--mode", mode, "quotient: sl (SL-tilde) or m (M-tilde)")->check(CLI::IsMember({"sl", "m"}));
    app.add_option("--output", cfg.output, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    auto* degree_opt = app.add_option("--degree", cfg.degree, "verification degree bound")->check(CLI::Range(0, 12));
    app.add_option("--samples", cfg.samples, "random sample count")->check(CLI::Range(0, 1000000));
    app.add_option("--seed", cfg.seed, "random seed");

    auto* relations = app.add_subcommand("relations", "print the reduction rules")->fallthrough();
    std::string expr;
    auto* reduce = app.add_subcommand("reduce", "print the normal form of an expression")->fallthrough();
    reduce->add_option("expr", expr, "expression, e.g. \"X[2,2]*X[1,1]\"")->required();
    auto* eval = app.add_subcommand("eval", "print an expression in the free algebra, unreduced")->fallthrough();
    eval->add_option("expr", expr, "expression")->required();
    std::string check;
    auto* verify = app.add_subcommand("verify", "run verification checks")->fallthrough();
    verify->add_option("check", check, "check name")->required()->check(CLI::IsMember(check_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    cfg.mode = mode == "m" ? Mode::Mtilde : Mode::SLtilde;
    cfg.degree_given = degree_opt->count() > 0;

    try {
        if (*relations) {
            out << cmd_relations(cfg);
        } else if (*reduce) {
            out << cmd_reduce(cfg, expr);
        } else if (*eval) {
            out << cmd_eval(cfg, expr);
        } else if (*verify) {
            auto outcome = cmd_verify(cfg, check);
            out << outcome.output;
            return outcome.exit_code;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qleft::cli
