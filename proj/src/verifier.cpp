#include "rumin/verifier.hpp"

#include "rumin/error.hpp"

namespace rumin {

namespace {

class Suite {
public:
    std::vector<CheckResult> results;

    /// One result per source degree of a.
    template <typename Entry>
    void equal(const std::string& name, const BasicGradedOperator<Entry>& a, const BasicGradedOperator<Entry>& b) {
        if (a.shift() != b.shift()) {
            results.push_back({name, std::nullopt, false, Witness{0, 0, "shifts differ", false}});
            return;
        }
        for (int k = a.min_degree(); k <= a.max_degree(); ++k) block(name, k, a.block(k), b.block(k));
    }

    void zero(const std::string& name, const GradedOperator& a) { equal(name, a, GradedOperator(a.space(), a.shift())); }

    template <typename Entry>
    void block(const std::string& name, int k, const Matrix<Entry>& a, const Matrix<Entry>& b) {
        CheckResult r{name, k, true, std::nullopt};
        if (a.rows() != b.rows() || a.cols() != b.cols()) {
            r.passed = false;
            r.witness = Witness{0, 0, "shape mismatch", false};
        } else {
            for (std::size_t i = 0; i < a.rows() && r.passed; ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (!(a(i, j) == b(i, j))) {
                        r.passed = false;
                        r.witness = Witness{i, j, (a(i, j) - b(i, j)).to_string()};
                        break;
                    }
        }
        results.push_back(std::move(r));
    }

    void flag(const std::string& name, std::optional<int> k, bool ok, const std::string& detail = {}) {
        CheckResult r{name, k, ok, std::nullopt};
        if (!ok) r.witness = Witness{0, 0, detail, false};
        results.push_back(std::move(r));
    }

    void profile(const std::string& name, const GradedOperator& t, bool increasing) {
        WeightProfile p = weight_profile(t);
        bool ok = increasing ? strictly_increases_weight(p) : preserves_weight(p);
        flag(name, std::nullopt, ok, "profile is " + to_string(p));
    }

    /// Runs f; an exception becomes a failed result instead of aborting the suite.
    template <typename F>
    void guarded(const std::string& name, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            flag(name, std::nullopt, false, e.what());
        }
    }
};

long rank_of(const ScalarMatrix& m) { return static_cast<long>(rank(m)); }

void acyclicity(Suite& s, const RuminComplex& c) {
    const int n = c.space->dimension();
    std::vector<long> f0_dim, image_rank;  // per degree: dim F0^k, rank of d0 on F0^k
    for (int k = 0; k <= n; ++k) {
        ScalarMatrix q = scalar_block(GradedOperator::identity(c.space) - c.pi0, k);
        f0_dim.push_back(rank_of(q));
        image_rank.push_back(k < n ? rank_of(scalar_block(c.d0, k) * q) : 0);
    }
    for (int k = 0; k <= n; ++k) {
        long kernel = f0_dim[static_cast<std::size_t>(k)] - image_rank[static_cast<std::size_t>(k)];
        long incoming = k > 0 ? image_rank[static_cast<std::size_t>(k - 1)] : 0;
        s.flag("F0 acyclic", k, kernel == incoming,
               "dim ker = " + std::to_string(kernel) + ", rank in = " + std::to_string(incoming));
    }
}

void spectral_checks(Suite& s, const RuminComplex& c) {
    if (!c.spectrum) {
        s.flag("spectral split", std::nullopt, false, c.spectrum_error);
        return;
    }
    const auto& alg = c.space->algebra;
    for (int k = 0; k <= c.space->dimension(); ++k) {
        const auto& spaces = (*c.spectrum)[static_cast<std::size_t>(k)];
        const std::size_t size = c.space->frame.size(k);
        ScalarMatrix sum(size, size), weighted(size, size);
        bool orthogonal = true;
        for (std::size_t a = 0; a < spaces.size(); ++a) {
            sum = sum + spaces[a].projector;
            weighted = weighted + spaces[a].projector.map(
                                      [&](const RationalFunction& x) { return x * spaces[a].eigenvalue; });
            for (std::size_t b = 0; b < spaces.size(); ++b) {
                ScalarMatrix prod = spaces[a].projector * spaces[b].projector;
                if (!(a == b ? prod == spaces[a].projector : prod.is_zero())) orthogonal = false;
            }
        }
        s.block("sum of spectral projectors = I", k, to_pbw(sum, alg), to_pbw(ScalarMatrix::identity(size), alg));
        s.flag("spectral projectors orthogonal", k, orthogonal, "Pi_a Pi_b != delta_ab Pi_a");
        s.block("sum lambda Pi_lambda = Box0", k, to_pbw(weighted, alg), c.box0.block(k));
    }
}

void resolvent_checks(Suite& s, const RuminComplex& c) {
    const ZPbwElement z(ZRationalFunction::z());
    ZGradedOperator shifted(c.space, 0);
    for (int k = 0; k <= c.space->dimension(); ++k) {
        shifted.block(k) = -c.box.block(k).map([](const PbwElement& e) { return ZPbwElement(e); });
        for (std::size_t i = 0; i < shifted.block(k).rows(); ++i) shifted.block(k)(i, i) += z;
    }
    const ZGradedOperator id = ZGradedOperator::identity(c.space);
    s.equal("(z - Box) R = I [direct]", shifted * c.resolvent_direct, id);
    s.equal("R (z - Box) = I [direct]", c.resolvent_direct * shifted, id);
    if (c.resolvent_spectral) {
        s.equal("(z - Box) R = I [spectral]", shifted * *c.resolvent_spectral, id);
        s.equal("resolvent routes agree", *c.resolvent_spectral, c.resolvent_direct);
        s.equal("P routes agree", c.P_spectral, c.P_direct);
    }
}

} // namespace

std::vector<CheckResult> run_suite(const RuminComplex& c, SuiteLevel level) {
    Suite s;
    const GradedOperator id = GradedOperator::identity(c.space);
    const GradedOperator f0 = id - c.pi0;
    const auto& L = c.l.L;
    const auto& Linv = c.l.L_inv;
    const auto& D = c.dc_split.D;
    const auto& C = c.dc_split.C;
    const auto& LdL = c.dc_split.LdL;

    s.zero("d^2 = 0", c.d * c.d);
    s.zero("d0^2 = 0", c.d0 * c.d0);
    s.zero("(d0^t)^2 = 0", c.d0_t * c.d0_t);
    s.zero("(d0inv)^2 = 0", c.d0_inv * c.d0_inv);
    s.equal("Pi0^2 = Pi0", c.pi0 * c.pi0, c.pi0);
    s.equal("Pi^2 = Pi", c.rumin.Pi * c.rumin.Pi, c.rumin.Pi);
    s.equal("P^2 = P", c.P * c.P, c.P);
    s.equal("L Linv = I", L * Linv, id);
    s.equal("Linv L = I", Linv * L, id);
    s.zero("(Linv d L)^2 = 0", LdL * LdL);
    s.zero("D^2 = 0", D * D);
    s.zero("C^2 = 0", C * C);
    if (level == SuiteLevel::fast) return std::move(s.results);

    s.equal("Pi0 routes agree", c.pi0, c.pi0_kernel_route);
    resolvent_checks(s, c);
    spectral_checks(s, c);
    s.equal("P d = d P", c.P * c.d, c.d * c.P);
    s.equal("P Box = Box P", c.P * c.box, c.box * c.P);
    s.equal("Pi0 P Pi0 = Pi0", c.pi0 * c.P * c.pi0, c.pi0);
    GradedOperator box_power = id;
    for (int j = 0; j < c.N0; ++j) box_power = box_power * c.box;
    s.zero("Box^N0 P = 0", box_power * c.P);
    s.equal("Pi0 = Linv P L", c.pi0, Linv * c.P * L);
    s.equal("Linv d L = D + C", LdL, D + C);
    s.equal("d Pi = Pi d", c.d * c.rumin.Pi, c.rumin.Pi * c.d);
    s.equal("d Pi_E = Pi_E d", c.d * c.rumin.Pi_E, c.rumin.Pi_E * c.d);
    s.zero("d0inv Pi_E = 0", c.d0_inv * c.rumin.Pi_E);
    s.zero("Pi_E d0inv = 0", c.rumin.Pi_E * c.d0_inv);
    s.zero("P (I - Pi0) P = 0", c.P * f0 * c.P);
    s.equal("P = I - Pi", c.P, c.rumin.Pi_E);
    s.equal("d_c = D", c.rumin.dc, D);

    const GradedOperator box_conj = Linv * c.box * L;
    s.equal("Pi0 (Linv Box L) = (Linv Box L) Pi0", c.pi0 * box_conj, box_conj * c.pi0);

    s.guarded("star Box", [&] { s.equal("star Box", star_conjugate(c.box, sign_box_type), formal_adjoint(c.box)); });
    s.guarded("star P", [&] { s.equal("star P", star_conjugate(c.P, sign_box_type), formal_adjoint(c.P)); });
    s.guarded("star L", [&] { s.equal("star L", star_conjugate(L, sign_box_type), c.l.L1); });
    s.guarded("star Pi0", [&] { s.equal("star Pi0", star_conjugate(c.pi0, sign_box_type), c.pi0); });
    s.guarded("star d", [&] { s.equal("star d", star_conjugate(c.d, sign_d_type), formal_adjoint(c.d)); });
    s.guarded("star D", [&] { s.equal("star D", star_conjugate(D, sign_d_type), formal_adjoint(D)); });

    s.equal("C g = g d0 on F0", C * c.gh.g_hat * f0, c.gh.g_hat * c.d0 * f0);
    s.equal("d h + h d = I - L Pi0 Linv", c.d * c.gh.h + c.gh.h * c.d, id - L * c.pi0 * Linv);

    s.profile("d - d0 strictly increases weight", c.d - c.d0, true);
    s.profile("B strictly increases weight", c.B, true);
    s.profile("P - Pi0 strictly increases weight", c.P - c.pi0, true);
    s.profile("L - I strictly increases weight", L - id, true);
    s.profile("Linv - I strictly increases weight", Linv - id, true);
    s.profile("Linv Box L - Box0 strictly increases weight", box_conj - c.box0, true);
    s.profile("d0 preserves weight", c.d0, false);
    s.profile("Box0 preserves weight", c.box0, false);
    s.profile("Pi0 preserves weight", c.pi0, false);

    acyclicity(s, c);
    long euler = 0;
    for (std::size_t k = 0; k < c.betti.size(); ++k) euler += (k % 2 == 0 ? 1 : -1) * c.betti[k];
    s.flag("Betti alternating sum = 0", std::nullopt, euler == 0, "sum is " + std::to_string(euler));
    return std::move(s.results);
}

std::vector<CheckResult> run_suite(const Algebra& alg, SuiteLevel level, const PipelineOptions& options) {
    PipelineOptions relaxed = options;
    relaxed.strict = false;
    try {
        return run_suite(build_complex(alg, relaxed), level);
    } catch (const Error& e) {
        return {CheckResult{"pipeline construction", std::nullopt, false, Witness{0, 0, e.what(), false}}};
    }
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace rumin
