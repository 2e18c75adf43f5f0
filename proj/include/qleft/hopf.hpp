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
#include <string>
#include <vector>

#include "parallel.hpp"
#include "report.hpp"
#include "rewrite.hpp"

namespace qleft {

/// A linear self-map given on words (the irreducible basis).
using BasisMap = WordMap;

/// The left antipode S: on generators the quantum adjoint,
///   S(X[i,j]) = (-q)^(j-i) det_q(X with row j and column i deleted),
/// and on an irreducible word X_1 ... X_r the reduced product S(X_r) ... S(X_1).
/// Generator images are computed once per instance.
class Antipode {
   public:
    explicit Antipode(const RewriteSystem& rs) : rs_(&rs), n_(rs.n()) {
        generators_.reserve(n_ * n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) generators_.push_back(normal_form(adjoint_entry(n_, i, j), rs));
    }

    const NcPoly& on_generator(const Generator& g) const { return generators_[(g.row - 1) * n_ + (g.col - 1)]; }

    NcPoly on_word(const Word& w) const {
        if (!rs_->is_irreducible(w))
            throw ContractViolation("S is defined on irreducible words; " + to_string(w) + " is reducible");
        NcPoly acc = constant_poly(LaurentPoly::one());
        for (auto it = w.end(); it != w.begin();) acc = normal_form(acc * on_generator(*--it), *rs_);
        return acc;
    }

    NcPoly operator()(const Word& w) const { return on_word(w); }

    /// Reduce first, then apply S basis-wise.
    NcPoly on_poly(const NcPoly& p) const {
        NcPoly acc;
        for (const auto& [w, c] : normal_form(p, *rs_)) acc += c * on_word(w);
        return normal_form(acc, *rs_);
    }

    BasisMap as_map() const {
        return [self = *this](const Word& w) { return self.on_word(w); };
    }

   private:
    const RewriteSystem* rs_;
    int n_;
    std::vector<NcPoly> generators_;
};

inline NcPoly antipode_word(const Word& w, const RewriteSystem& rs) { return Antipode(rs).on_word(w); }
inline NcPoly antipode_poly(const NcPoly& p, const RewriteSystem& rs) { return Antipode(rs).on_poly(p); }

/// The convolution unit w -> epsilon(w) 1.
inline NcPoly unit_counit_map(const Word& w) { return constant_poly(counit_word(w)); }

/// (f * g)(w) = m (f (x) g) Delta(w), each factor reduced before f or g is
/// applied and every product reduced as it is accumulated.
inline NcPoly convolve(const BasisMap& f, const BasisMap& g, const Word& w, const RewriteSystem& rs) {
    std::map<Word, NcPoly> nf_cache;
    auto nf = [&](const Word& u) -> const NcPoly& {
        auto it = nf_cache.find(u);
        if (it == nf_cache.end()) it = nf_cache.emplace(u, normal_form(NcPoly::single(u), rs)).first;
        return it->second;
    };
    NcPoly acc;
    for (const auto& [pair, c] : coproduct_word(w, rs.n())) {
        NcPoly left = apply_linear(f, nf(pair.first));
        if (left.is_zero()) continue;
        NcPoly right = apply_linear(g, nf(pair.second));
        acc += c * normal_form(left * right, rs);
    }
    return acc;
}

/// Every left factor of Delta(w), before reduction, is irreducible.
inline bool check_star(const Word& w, const RewriteSystem& rs) {
    for (const auto& [pair, c] : coproduct_word(w, rs.n()))
        if (!rs.is_irreducible(pair.first)) return false;
    return true;
}

/// sum_j S(X[i,j]) X[j,i'], reduced.
inline NcPoly adjoint_product_entry(const Antipode& S, const RewriteSystem& rs, int i, int i2) {
    NcPoly sum;
    for (int j = 1; j <= rs.n(); ++j) sum += S.on_generator(Generator(i, j)) * generator_poly(j, i2);
    return normal_form(sum, rs);
}

/// S(X) X = D * identity, entry by entry, in either quotient (D reduces to 1
/// in SLtilde).
inline Report check_adjoint_product(int n, Mode mode) {
    const RewriteSystem rs = build_rules(n, mode);
    const Antipode S(rs);
    const NcPoly d = normal_form(build_D(n), rs);
    Report r{"adjoint-product", n, mode_name(mode), {}, {}};
    for (int i = 1; i <= n; ++i)
        for (int i2 = 1; i2 <= n; ++i2) {
            NcPoly got = adjoint_product_entry(S, rs, i, i2);
            NcPoly expected = i == i2 ? d : NcPoly{};
            r.items.push_back({"sum_j S(X[" + std::to_string(i) + ",j]) X[j," + std::to_string(i2) + "]",
                               to_string(expected), to_string(got), got == expected});
        }
    r.summary = std::to_string(n * n - r.failures()) + "/" + std::to_string(n * n) +
                " entries of S(X)X equal " + (mode == Mode::SLtilde ? "the identity" : "D times the identity");
    return r;
}

/// (S * I)(w) = epsilon(w) 1 on each given basis word, plus the generator
/// matrix identity, in SLtilde.
inline Report check_left_antipode(int n, const std::vector<Word>& words) {
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const Antipode S(rs);
    const BasisMap s_map = S.as_map();
    Report r = check_adjoint_product(n, Mode::SLtilde);
    r.check = "left-antipode";
    const std::size_t matrix_items = r.items.size();
    auto results = parallel_map(words.size(), [&](std::size_t k) {
        const Word& w = words[k];
        NcPoly got = convolve(s_map, identity_word_map, w, rs);
        NcPoly expected = constant_poly(counit_word(w));
        return ReportItem{"(S*I)(" + to_string(w) + ")", to_string(expected), to_string(got), got == expected};
    });
    for (auto& item : results) r.items.push_back(std::move(item));
    r.summary = "S(X)X = I on " + std::to_string(matrix_items) + " entries; (S*I)(w) = eps(w)1 on " +
                std::to_string(words.size()) + " basis words; " + std::to_string(r.failures()) + " failures";
    return r;
}

/// (I * S)(X[1,1]) = sum_j X[1,j] S(X[j,1]) in SLtilde, reduced.
inline NcPoly right_antipode_witness(int n) {
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const Antipode S(rs);
    NcPoly sum;
    for (int j = 1; j <= n; ++j) sum += generator_poly(1, j) * S.on_generator(Generator(j, 1));
    return normal_form(sum, rs);
}

inline Report check_right_antipode_fails(int n) {
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const NcPoly witness = right_antipode_witness(n);
    const NcPoly one = constant_poly(LaurentPoly::one());
    Report r{"right-antipode-fails", n, "sl", {}, {}};
    r.items.push_back({"(I*S)(X[1,1])", "!= 1", to_string(witness), witness != one});
    for (const auto& [w, c] : witness) {
        if (w.empty()) continue;
        bool ok = w.degree() == static_cast<std::size_t>(n) && rs.is_irreducible(w);
        r.items.push_back({to_string(w), "irreducible of degree " + std::to_string(n),
                           std::string(rs.is_irreducible(w) ? "irreducible" : "reducible") + " of degree " +
                               std::to_string(w.degree()),
                           ok});
    }
    r.summary = "(I*S)(X[1,1]) = " + to_string(witness);
    return r;
}

inline Report check_star_report(int n, int max_degree, Mode mode) {
    const RewriteSystem rs = build_rules(n, mode);
    const auto words = enumerate_irreducible_upto(n, max_degree, rs);
    auto results = parallel_map(words.size(), [&](std::size_t k) {
        bool ok = check_star(words[k], rs);
        return ReportItem{to_string(words[k]), "all left factors irreducible",
                          ok ? "all left factors irreducible" : "reducible left factor", ok};
    });
    Report r{"star", n, mode_name(mode), std::move(results), {}};
    r.summary = std::to_string(words.size() - r.failures()) + "/" + std::to_string(words.size()) +
                " irreducible words of degree <= " + std::to_string(max_degree) + " satisfy the property";
    return r;
}

/// Delta(D) - D (x) D (Mtilde) or Delta(D) - 1 (x) 1 (SLtilde), reduced in
/// both factors.
inline TensorPoly grouplike_defect(int n, Mode mode) {
    const RewriteSystem rs = build_rules(n, mode);
    const NcPoly D = build_D(n);
    TensorPoly diff = coproduct(D, n);
    if (mode == Mode::SLtilde)
        diff -= TensorPoly::single(WordPair{});
    else
        diff -= tensor(D, D);
    return tensor_normal_form(diff, rs);
}

inline bool check_grouplike_D(int n, Mode mode = Mode::Mtilde) { return grouplike_defect(n, mode).is_zero(); }

inline Report check_grouplike_report(int n, Mode mode) {
    TensorPoly defect = grouplike_defect(n, mode);
    Report r{"grouplike", n, mode_name(mode), {}, {}};
    r.items.push_back({mode == Mode::SLtilde ? "Delta(D) - 1 (x) 1" : "Delta(D) - D (x) D", "0", to_string(defect),
                       defect.is_zero()});
    r.summary = std::string("D is grouplike") + (defect.is_zero() ? "" : " FAILED");
    return r;
}

/// epsilon(E_I) = 0 and Delta(E_I) reduces to 0 in Mtilde (x) Mtilde, for all I.
inline Report check_coideal(int n) {
    const RewriteSystem rs = build_rules(n, Mode::Mtilde);
    const auto tuples = all_tuples(n, n);
    auto results = parallel_map(tuples.size(), [&](std::size_t k) {
        const NcPoly e = build_EI(n, tuples[k]);
        const LaurentPoly eps = counit(e);
        const TensorPoly delta = tensor_normal_form(coproduct(e, n), rs);
        return ReportItem{"E" + tuples[k].to_string(), "eps = 0, Delta = 0",
                          "eps = " + eps.to_string() + ", Delta = " + to_string(delta),
                          eps.is_zero() && delta.is_zero()};
    });
    Report r{"coideal", n, "m", std::move(results), {}};
    r.summary = std::to_string(tuples.size() - r.failures()) + "/" + std::to_string(tuples.size()) +
                " generators E_I of the ideal satisfy the coideal conditions";
    return r;
}

struct AntimorphismWitness {
    Word u;
    Word v;
    NcPoly s_of_uv;     ///< S(uv)
    NcPoly s_v_s_u;     ///< S(v) S(u), reduced
};

/// Search pairs (u, v) of irreducible words for S(uv) != S(v)S(u) in SLtilde.
///
/// Pairs are visited by increasing total degree (from 2 up to
/// max_total_degree), then lexicographically on (u, v). Within the first
/// degree that has any discrepancy, a pair whose two sides already differ in
/// their scalar (degree-0) part is preferred; otherwise the first discrepancy
/// is returned.
inline AntimorphismWitness antimorphism_witness(int n, int max_total_degree = 2) {
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const Antipode S(rs);
    std::vector<std::vector<Word>> by_degree;
    for (int d = 0; d < max_total_degree; ++d) by_degree.push_back(enumerate_irreducible(n, d, rs));
    for (int total = 2; total <= max_total_degree; ++total) {
        std::optional<AntimorphismWitness> first;
        for (int du = 1; du < total; ++du)
            for (const Word& u : by_degree[du])
                for (const Word& v : by_degree[total - du]) {
                    // S on an irreducible uv is the reduced S(v)S(u) by definition.
                    if (rs.is_irreducible(u * v)) continue;
                    NcPoly lhs = S.on_poly(NcPoly::single(u * v));
                    NcPoly rhs = normal_form(S.on_word(v) * S.on_word(u), rs);
                    if (lhs == rhs) continue;
                    AntimorphismWitness w{u, v, std::move(lhs), std::move(rhs)};
                    if (w.s_of_uv.coefficient(Word{}) != w.s_v_s_u.coefficient(Word{})) return w;
                    if (!first) first = std::move(w);
                }
        if (first) return *first;
    }
    throw ExhaustedSearch("S(uv) = S(v)S(u) for all irreducible u, v with deg(u) + deg(v) <= " +
                          std::to_string(max_total_degree) + " at n = " + std::to_string(n));
}

struct CoalgebraAntimorphismResult {
    bool fails;             ///< true iff the two sides differ
    TensorPoly delta_s;     ///< Delta(S(w)), reduced
    TensorPoly s_s_swap;    ///< (S (x) S)(swap(Delta(w))), reduced
};

/// Compare Delta S with (S (x) S) tau Delta on a word (default X[1,1]^2).
inline CoalgebraAntimorphismResult coalgebra_antimorphism_check(int n, const Word& w = Word{{1, 1}, {1, 1}}) {
    const RewriteSystem rs = build_rules(n, Mode::SLtilde);
    const Antipode S(rs);
    TensorPoly a = tensor_normal_form(coproduct(S.on_poly(NcPoly::single(w)), n), rs);
    auto s_lin = [&](const Word& u) { return S.on_poly(NcPoly::single(u)); };
    TensorPoly b = tensor_normal_form(tensor_map(swap_factors(coproduct_word(w, n)), s_lin, s_lin), rs);
    bool differs = a != b;
    return {differs, std::move(a), std::move(b)};
}

}  // namespace qleft
