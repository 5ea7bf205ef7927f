// One line per acceptance criterion; exit status 0 iff all pass.
#include "golden.hpp"
#include "word_oracle.hpp"

#include "rumin/complex.hpp"
#include "rumin/error.hpp"
#include "rumin/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rumin;
using rumin::testing::compare_block;
using rumin::testing::golden_matrix;
using rumin::testing::GoldenTable;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

const GoldenTable& golden() {
    static const GoldenTable t = rumin::testing::load_golden(std::string(RUMIN_GOLDEN_DIR) + "/engel.txt");
    return t;
}

const RuminComplex& engel() {
    static const RuminComplex c = build_complex(catalog("engel"));
    return c;
}

const RuminComplex& complex_of(const std::string& name) {
    static std::map<std::string, RuminComplex> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_complex(catalog(name))).first;
    return it->second;
}

void match_golden(Outcome& o, const std::string& name, const GradedOperator& t, int from, int to) {
    for (int k = from; k <= to; ++k) {
        const std::string key = name + " " + std::to_string(k);
        auto diffs = compare_block(t.block(k), golden_matrix(golden(), key, t.space()->algebra));
        for (const auto& d : diffs) o.expect(false, key + " " + d);
    }
}

/// Matrix assembled from a grid of blocks.
PbwMatrix blocks(const std::vector<std::vector<PbwMatrix>>& grid) {
    std::size_t rows = 0, cols = 0;
    for (const auto& r : grid) rows += r[0].rows();
    for (const auto& b : grid[0]) cols += b.cols();
    PbwMatrix m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& r : grid) {
        std::size_t c0 = 0;
        for (const auto& b : r) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
            c0 += b.cols();
        }
        r0 += r[0].rows();
    }
    return m;
}

PbwMatrix zero_block(std::size_t r, std::size_t c) { return PbwMatrix(r, c); }

PbwMatrix diag(const Algebra& alg, const std::vector<std::string>& entries) {
    PbwMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = PbwElement::parse(alg, entries[i]);
    return m;
}

Outcome criterion1() {
    Outcome o;
    const auto& c = engel();
    const auto& alg = c.space->algebra;
    match_golden(o, "d", c.d, 0, 3);
    match_golden(o, "d0", c.d0, 0, 3);
    o.expect(c.d0.block(0) == zero_block(4, 1), "d0(0) = 0_{4,1}");
    o.expect(c.d0.block(1) == blocks({{zero_block(2, 2), diag(alg, {"-1", "-t"})}, {zero_block(4, 2), zero_block(4, 2)}}),
             "d0(1) block form");
    o.expect(c.d0.block(2) == blocks({{zero_block(2, 4), diag(alg, {"-t", "-1"})}, {zero_block(2, 4), zero_block(2, 2)}}),
             "d0(2) block form");
    o.expect(c.d0.block(3) == zero_block(1, 4), "d0(3) = 0_{1,4}");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto& c = engel();
    const auto& alg = c.space->algebra;
    o.expect(c.box0.block(1) == diag(alg, {"0", "0", "1", "t^2"}), "Box0(1) = diag(0,0,1,t^2)");
    o.expect(c.box0.block(3) == diag(alg, {"t^2", "1", "0", "0"}), "Box0(3) = diag(t^2,1,0,0)");

    // Box0(2) from the published k=2 projectors, and independently from the published d0 blocks.
    PbwMatrix from_projectors(6, 6);
    for (const char* lambda : {"1", "t^2"})
        from_projectors = from_projectors +
                          golden_matrix(golden(), std::string("spectral 2 ") + lambda, alg)
                              .map([&](const PbwElement& e) { return e * PbwElement::parse(alg, lambda); });
    PbwMatrix d0_1 = golden_matrix(golden(), "d0 1", alg), d0_2 = golden_matrix(golden(), "d0 2", alg);
    PbwMatrix from_d0 = d0_1 * d0_1.transpose() + d0_2.transpose() * d0_2;
    o.expect(from_projectors == from_d0, "published k=2 projectors consistent with published d0");
    o.expect(c.box0.block(2) == from_d0, "Box0(2) = d0 d0^t + d0^t d0 of the published d0");
    o.expect(c.box0.block(2) == diag(alg, {"1", "t^2", "0", "0", "t^2", "1"}), "Box0(2) = diag(1,t^2,0,0,t^2,1)");
    const PbwMatrix literal = diag(alg, {"1", "t^2", "0", "0", "1", "t^2"});
    if (!(literal == from_d0))
        o.note("stated diag(1,t^2,0,0,1,t^2) contradicts d0 and the k=2 projectors; diag(1,t^2,0,0,t^2,1) used");
    match_golden(o, "box0", c.box0, 0, 4);

    if (!c.spectrum) {
        o.expect(false, "spectral split failed: " + c.spectrum_error);
        return o;
    }
    std::size_t matched = 0;
    for (int k = 0; k <= 4; ++k) {
        std::vector<std::string> values;
        for (const auto& e : (*c.spectrum)[static_cast<std::size_t>(k)]) {
            values.push_back(e.eigenvalue.to_string());
            const std::string key = "spectral " + std::to_string(k) + " " + e.eigenvalue.to_string();
            if (!golden().count(key)) {
                o.expect(false, "unexpected eigenspace " + key);
                continue;
            }
            o.expect(to_pbw(e.projector, alg) == golden_matrix(golden(), key, alg), key);
            if (k >= 1 && k <= 3 && !e.eigenvalue.is_zero()) ++matched;
        }
        const std::vector<std::string> expected =
            (k == 0 || k == 4) ? std::vector<std::string>{"0"} : std::vector<std::string>{"0", "1", "t^2"};
        o.expect(values == expected, "eigenvalues at degree " + std::to_string(k));
    }
    o.expect(matched == 6, "six nonzero-eigenvalue projectors");

    // --bind-early t=1: the pipeline over the specialized structure constants.
    RuminComplex c1 = build_complex(catalog("engel")->specialize({{"t", 1}}));
    if (!c1.spectrum) {
        o.expect(false, "t=1 spectral split failed");
        return o;
    }
    const auto& s1 = (*c1.spectrum)[1];
    o.expect(s1.size() == 2 && s1[1].eigenvalue.is_one() &&
                 to_pbw(s1[1].projector, c1.space->algebra) == diag(c1.space->algebra, {"0", "0", "1", "1"}),
             "t=1 merged projector diag(0,0,1,1)");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto& c = engel();
    match_golden(o, "box", c.box, 0, 4);
    match_golden(o, "B", c.B, 0, 4);
    o.expect(weight_profile(c.B) == WeightProfile::strictly_increases, "weight_profile(B) = strictly_increases");
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto& c = engel();
    if (!c.resolvent_spectral) {
        o.expect(false, "spectral resolvent unavailable");
        return o;
    }
    o.expect(*c.resolvent_spectral == c.resolvent_direct, "spectral and direct resolvents agree");
    const ZPbwElement z(ZRationalFunction::z());
    for (int k = 0; k <= 4; ++k) {
        ZPbwMatrix shifted = -c.box.block(k).map([](const PbwElement& e) { return ZPbwElement(e); });
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) += z;
        const auto id = ZPbwMatrix::identity(shifted.rows());
        for (const auto* r : {&*c.resolvent_spectral, &c.resolvent_direct}) {
            o.expect(shifted * r->block(k) == id, "(z-Box)R = I at degree " + std::to_string(k));
            o.expect(r->block(k) * shifted == id, "R(z-Box) = I at degree " + std::to_string(k));
        }
    }
    const ZPbwElement one_over_z(ZRationalFunction(ZPolynomial(RationalFunction(1)), ZPolynomial::z()));
    for (int k : {0, 4}) {
        const auto& b = c.resolvent_direct.block(k);
        o.expect(b.rows() == 1 && b.cols() == 1 && b(0, 0) == one_over_z, "resolvent(" + std::to_string(k) + ") = 1/z");
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto& c = engel();
    const auto& alg = c.space->algebra;
    // (X1^2 X2 - X2 X1^2)/t through the word rewriter, independent of the PBW multiplication.
    const RationalFunction inv_t = RationalFunction(1) / RationalFunction::parameter("t");
    PbwElement oracle = rumin::testing::rewrite_words(alg, {{{0, 0, 1}, inv_t}, {{1, 0, 0}, -inv_t}});
    o.expect(oracle == PbwElement::parse(alg, "(2/t)*X1.X3 - X4"), "oracle: (X1^2X2 - X2X1^2)/t = 2X1X3/t - X4");
    o.note("(X1^2X2 - X2X1^2)/t normalizes to " + oracle.to_string());
    o.expect(c.P.block(2)(5, 0) == oracle, "P(2) entry (6,1) equals the oracle");
    o.expect(c.l.L.block(2)(5, 0) == -oracle, "L(2) entry (6,1) equals minus the oracle");
    match_golden(o, "P", c.P, 0, 4);
    match_golden(o, "L", c.l.L, 0, 4);
    match_golden(o, "Linv", c.l.L_inv, 0, 4);
    return o;
}

Outcome criterion6() {
    Outcome o;
    const auto& c = engel();
    const auto& alg = c.space->algebra;
    match_golden(o, "LdL", c.dc_split.LdL, 0, 3);
    match_golden(o, "D", c.dc_split.D, 0, 3);
    match_golden(o, "C", c.dc_split.C, 0, 3);
    o.expect(c.dc_split.D.block(1)(3, 0) == PbwElement::parse(alg, "-X4-(X1^2*X2+X1*X3)/t"),
             "D(1) entry -X4-(X1^2X2+X1X3)/t");
    o.expect(c.dc_split.C.block(0) == zero_block(4, 1), "C(0) = 0_{4,1}");
    o.expect(c.dc_split.C.block(3) == zero_block(1, 4), "C(3) = 0_{1,4}");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (const auto& name : catalog_names()) {
        const auto& c = complex_of(name);
        o.expect(c.rumin.dc == c.dc_split.D, name + ": d_c = D");
        o.expect(c.P == GradedOperator::identity(c.space) - c.rumin.Pi, name + ": P = I - Pi");
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::size_t total = 0;
    for (const auto& name : catalog_names()) {
        auto results = run_suite(complex_of(name), SuiteLevel::full);
        total += results.size();
        for (const auto& r : results)
            o.expect(r.passed, name + ": " + r.name + " k=" + r.degree_label() +
                                   (r.witness ? " (" + r.witness->difference + ")" : ""));
    }
    o.note(std::to_string(total) + " checks");
    return o;
}

/// b_k = C(n,k) - rank d0(k) - rank d0(k-1), from the scalar d0 blocks alone.
std::vector<long> betti_from_ranks(const RuminComplex& c) {
    const int n = c.space->dimension();
    std::vector<long> r(static_cast<std::size_t>(n) + 1, 0), out;
    for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = static_cast<long>(rank(scalar_block(c.d0, k)));
    for (int k = 0; k <= n; ++k)
        out.push_back(static_cast<long>(c.space->frame.size(k)) - r[static_cast<std::size_t>(k)] -
                      (k > 0 ? r[static_cast<std::size_t>(k - 1)] : 0));
    return out;
}

Outcome criterion9() {
    Outcome o;
    const std::map<std::string, std::vector<long>> expected = {
        {"engel", {1, 2, 2, 2, 1}}, {"abelian3", {1, 3, 3, 1}}, {"heisenberg3", {1, 2, 2, 1}}};
    for (const auto& [name, betti] : expected) o.expect(complex_of(name).betti == betti, name + " Betti numbers");
    for (const auto& name : catalog_names()) {
        const auto& c = complex_of(name);
        o.expect(c.betti == betti_from_ranks(c), name + ": Betti numbers agree with d0 ranks");
        long euler = 0;
        for (std::size_t k = 0; k < c.betti.size(); ++k) euler += (k % 2 ? -1 : 1) * c.betti[k];
        o.expect(euler == 0, name + ": alternating sum zero");
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (const char* name : {"abelian2", "abelian3"}) {
        const auto& c = complex_of(name);
        const GradedOperator id = GradedOperator::identity(c.space);
        const std::string n = name;
        o.expect(c.pi0 == id, n + ": Pi0 = I");
        o.expect(c.P == id, n + ": P = I");
        o.expect(c.l.L == id, n + ": L = I");
        o.expect(c.dc_split.D == c.d, n + ": D = d");
        o.expect(c.dc_split.C.is_zero(), n + ": C = 0");
        o.expect(c.rumin.dc == c.d, n + ": d_c = d");
        o.expect(c.N0 == 1, n + ": N0 = 1");
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Engel differentials d and d0", criterion1},
        {"Engel Box0 and spectral projectors", criterion2},
        {"Engel Box and B", criterion3},
        {"Engel resolvent", criterion4},
        {"Engel P, L, Linv", criterion5},
        {"Engel Linv d L, D, C", criterion6},
        {"d_c = D and P = I - Pi on the catalog", criterion7},
        {"full property suite on the catalog", criterion8},
        {"Betti numbers", criterion9},
        {"abelian baselines", criterion10},
    };
    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << (o.passed ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
             << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& n : o.notes) std::cout << "      note: " << n << "\n";
        for (const auto& f : o.failures) std::cout << "      " << f << "\n";
        all = all && o.passed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (all ? "all criteria passed" : "some criteria failed") << " in " << total << " s\n";
    return all && total < 60.0 ? 0 : 1;
}
