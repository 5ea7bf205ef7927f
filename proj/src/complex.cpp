#include "rumin/complex.hpp"

#include "rumin/error.hpp"

#include <map>

namespace rumin {

namespace {

using Form = std::map<MultiIndex, RationalFunction>;

void add(Form& f, const MultiIndex& I, const RationalFunction& c) {
    auto [it, inserted] = f.try_emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

/// theta^A ^ theta^B as (sign, index).
std::pair<int, MultiIndex> wedge(const MultiIndex& A, const MultiIndex& B) {
    int sign = 1;
    MultiIndex out = B;
    for (auto it = A.rbegin(); it != A.rend(); ++it) {
        auto [s, next] = wedge_insert(*it, out);
        if (s == 0) return {0, {}};
        sign *= s;
        out = std::move(next);
    }
    return {sign, out};
}

/// d0 theta^l = -sum_{i<j} c_ij^l theta^i ^ theta^j.
Form d0_one_form(const LieAlgebra& alg, int l) {
    Form f;
    for (const auto& [key, terms] : alg.brackets())
        for (const auto& t : terms)
            if (t.k == l) add(f, {key.first, key.second}, -t.coeff);
    return f;
}

void require(bool ok, bool strict, const std::string& what) {
    if (!ok && strict) throw VerificationFailed(what);
}

using ZScalarMatrix = Matrix<ZRationalFunction>;

/// Gauss-Jordan inverse over the field of z-rational functions.
ZScalarMatrix inverse_z(const ZScalarMatrix& m) {
    const std::size_t n = m.rows();
    ZScalarMatrix a = m, inv = ZScalarMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) throw InternalCheckFailed("z - Box0 is singular");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        ZRationalFunction f = ZRationalFunction(RationalFunction(1)) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= f;
            if (!inv(col, j).is_zero()) inv(col, j) *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            ZRationalFunction g = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(i, j) -= g * a(col, j);
                if (!inv(col, j).is_zero()) inv(i, j) -= g * inv(col, j);
            }
        }
    }
    return inv;
}

ZPbwMatrix lift(const PbwMatrix& m) {
    return m.map([](const PbwElement& e) { return ZPbwElement(e); });
}

} // namespace

GradedOperator build_d0(const Space& space) {
    const auto& alg = *space->algebra;
    const auto& frame = space->frame;
    const int n = space->dimension();
    std::vector<Form> one_forms;
    for (int l = 0; l < n; ++l) one_forms.push_back(d0_one_form(alg, l));
    GradedOperator r(space, 1);
    for (int k = 0; k < n; ++k) {
        const auto& basis = frame.basis(k);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const MultiIndex& I = basis[col];
            Form image;
            // Leibniz: d0(theta^{i1} ^ ... ^ theta^{ik}) = sum_p (-1)^p ... ^ d0 theta^{ip} ^ ...
            for (std::size_t p = 0; p < I.size(); ++p) {
                MultiIndex left(I.begin(), I.begin() + static_cast<std::ptrdiff_t>(p));
                MultiIndex right(I.begin() + static_cast<std::ptrdiff_t>(p) + 1, I.end());
                const int sign_p = p % 2 == 0 ? 1 : -1;
                for (const auto& [two, c] : one_forms[static_cast<std::size_t>(I[p])]) {
                    auto [s1, mid] = wedge(two, right);
                    if (s1 == 0) continue;
                    auto [s2, full] = wedge(left, mid);
                    if (s2 == 0) continue;
                    add(image, full, c * RationalFunction(static_cast<long>(sign_p * s1 * s2)));
                }
            }
            for (const auto& [J, c] : image)
                r.block(k)(frame.position(J), col) = PbwElement::monomial(space->algebra, {}, c);
        }
    }
    return r;
}

GradedOperator build_d(const Space& space) {
    GradedOperator r = build_d0(space);
    const auto& frame = space->frame;
    const int n = space->dimension();
    for (int k = 0; k < n; ++k) {
        const auto& basis = frame.basis(k);
        for (std::size_t col = 0; col < basis.size(); ++col)
            for (int j = 0; j < n; ++j) {
                auto [sign, J] = wedge_insert(j, basis[col]);
                if (sign == 0) continue;
                PbwElement x = PbwElement::generator(space->algebra, j);
                r.block(k)(frame.position(J), col) += sign > 0 ? x : -x;
            }
    }
    return r;
}

GradedOperator build_d0_partial_inverse(const GradedOperator& d0) {
    GradedOperator r(d0.space(), -1);
    for (int k = d0.min_degree(); k <= d0.max_degree(); ++k)
        r.block(k + 1) = to_pbw(pseudoinverse(scalar_block(d0, k)), d0.space()->algebra);
    return r;
}

GradedOperator build_box0(const GradedOperator& d0) {
    GradedOperator d0t = formal_adjoint(d0);
    return d0 * d0t + d0t * d0;
}

GradedOperator build_pi0(const GradedOperator& d0, const GradedOperator& d0_inv, const GradedOperator& box0,
                         Pi0Route route) {
    if (route == Pi0Route::r0) return GradedOperator::identity(d0.space()) - d0_inv * d0 - d0 * d0_inv;
    GradedOperator r(box0.space(), 0);
    for (int k = 0; k <= box0.dimension(); ++k)
        r.block(k) = to_pbw(kernel_projector(scalar_block(box0, k)), box0.space()->algebra);
    return r;
}

std::vector<long> betti_numbers(const GradedOperator& pi0) {
    std::vector<long> out;
    for (int k = 0; k <= pi0.dimension(); ++k) {
        auto tr = trace(scalar_block(pi0, k)).constant_value();
        if (!tr || tr->get_den() != 1) throw InternalCheckFailed("trace of a projector is not an integer");
        out.push_back(tr->get_num().get_si());
    }
    return out;
}

SpectralDecomposition spectral_decompose(const GradedOperator& box0) {
    SpectralDecomposition out;
    for (int k = 0; k <= box0.dimension(); ++k) out.push_back(spectral_decompose(scalar_block(box0, k)));
    return out;
}

GradedOperator build_box(const GradedOperator& d, const GradedOperator& d0) {
    GradedOperator d0t = formal_adjoint(d0);
    return d * d0t + d0t * d;
}

ZGradedOperator build_resolvent(const GradedOperator& box0, const GradedOperator& box, ResolventRoute route,
                                const SpectralDecomposition* spectrum) {
    const Space& space = box.space();
    const int n0 = compute_N0(*space->algebra);
    const GradedOperator B = box - box0;
    ZGradedOperator out(space, 0);
    const ZRationalFunction z = ZRationalFunction::z();
    for (int k = 0; k <= space->dimension(); ++k) {
        const std::size_t size = space->frame.size(k);
        ZScalarMatrix r0(size, size);
        if (route == ResolventRoute::spectral) {
            if (!spectrum) throw InternalCheckFailed("spectral resolvent route needs the spectral decomposition");
            for (const auto& e : (*spectrum)[static_cast<std::size_t>(k)]) {
                ZRationalFunction w = ZRationalFunction(RationalFunction(1)) / (z - ZRationalFunction(e.eigenvalue));
                r0 = r0 + e.projector.map([&](const RationalFunction& c) {
                    return c.is_zero() ? ZRationalFunction() : w * ZRationalFunction(c);
                });
            }
        } else {
            ScalarMatrix b0 = scalar_block(box0, k);
            ZScalarMatrix zb(size, size);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j) zb(i, j) = -ZRationalFunction(b0(i, j));
            for (std::size_t i = 0; i < size; ++i) zb(i, i) += z;
            r0 = inverse_z(zb);
        }
        ZPbwMatrix R0 = r0.map([&](const ZRationalFunction& c) {
            ZPbwElement e(c);
            return e;
        });
        ZPbwMatrix BR0 = lift(B.block(k)) * R0;
        ZPbwMatrix sum = ZPbwMatrix::identity(size), power = ZPbwMatrix::identity(size);
        for (int j = 1; j < n0; ++j) {
            power = power * BR0;
            if (power.is_zero()) break;
            sum = sum + power;
        }
        out.block(k) = R0 * sum;
    }
    return out;
}

GradedOperator build_P(const ZGradedOperator& resolvent) {
    return resolvent.map([](const ZPbwElement& e) { return e.residue(); });
}

LOperators build_L(const GradedOperator& P, const GradedOperator& pi0) {
    const GradedOperator id = GradedOperator::identity(P.space());
    LOperators out;
    out.L = P * pi0 + (id - P) * (id - pi0);
    out.L_inv = invert_unipotent(out.L);
    GradedOperator Pt = formal_adjoint(P);
    out.L1 = Pt * pi0 + (id - Pt) * (id - pi0);
    return out;
}

DCOperators build_D_and_C(const LOperators& l, const GradedOperator& d, const GradedOperator& pi0) {
    const GradedOperator id = GradedOperator::identity(d.space());
    DCOperators out;
    out.LdL = l.L_inv * d * l.L;
    out.D = out.LdL * pi0;
    out.C = out.LdL * (id - pi0);
    return out;
}

RuminOperators build_rumin_dc(const GradedOperator& d, const GradedOperator& d0, const GradedOperator& d0_inv,
                              const GradedOperator& pi0) {
    const GradedOperator id = GradedOperator::identity(d.space());
    RuminOperators out;
    out.b = -(d0_inv * (d - d0));
    GradedOperator inv = invert_unipotent(id - out.b);
    out.Pi = inv * d0_inv * d + d * inv * d0_inv;
    out.Pi_E = id - out.Pi;
    out.dc = pi0 * d * out.Pi_E * pi0;
    return out;
}

GHOperators build_g_and_h(const GradedOperator& C, const GradedOperator& d0, const GradedOperator& box0,
                          const GradedOperator& pi0, const LOperators& l) {
    const Space& space = d0.space();
    const GradedOperator id = GradedOperator::identity(space);
    const GradedOperator f0 = id - pi0;
    GradedOperator box0_pinv(space, 0);
    for (int k = 0; k <= space->dimension(); ++k)
        box0_pinv.block(k) = to_pbw(pseudoinverse(scalar_block(box0, k)), space->algebra);
    const GradedOperator homotopy0 = formal_adjoint(d0) * box0_pinv;  // d0^t Box0^+
    GHOperators out;
    out.g_hat = pi0 + (C * f0 * homotopy0 + f0 * homotopy0 * d0) * f0;
    out.g_hat_inv = invert_unipotent(out.g_hat);
    out.h = l.L * out.g_hat * f0 * homotopy0 * out.g_hat_inv * f0 * l.L_inv;
    return out;
}

const std::vector<std::string>& operator_names() {
    static const std::vector<std::string> names = {"d",  "d0", "d0inv", "box0", "pi0", "spectral", "box", "B",
                                                   "resolvent", "P", "L", "Linv", "L1", "LdL", "D", "C",
                                                   "b", "Pi", "dc", "g", "h", "betti"};
    return names;
}

RuminComplex build_complex(const Algebra& alg, const PipelineOptions& options) {
    RuminComplex c;
    c.space = make_space(alg);
    c.N0 = compute_N0(*alg);
    const bool strict = options.strict;
    const auto fault = [&](const char* name) { return options.inject_fault && *options.inject_fault == name; };
    const auto corrupt = [](GradedOperator& t) {
        for (int k = t.min_degree(); k <= t.max_degree(); ++k) {
            auto& b = t.block(k);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (!b(i, j).is_zero()) {
                        b(i, j) = -b(i, j);
                        return;
                    }
        }
    };

    c.d0 = build_d0(c.space);
    if (fault("d0")) corrupt(c.d0);
    require((c.d0 * c.d0).is_zero(), strict, "d0^2 = 0");
    c.d = build_d(c.space);
    if (fault("d")) corrupt(c.d);
    c.d0_t = formal_adjoint(c.d0);
    c.d0_inv = build_d0_partial_inverse(c.d0);
    c.box0 = build_box0(c.d0);
    c.pi0 = build_pi0(c.d0, c.d0_inv, c.box0, Pi0Route::r0);
    c.pi0_kernel_route = build_pi0(c.d0, c.d0_inv, c.box0, Pi0Route::box0_kernel);
    if (strict && !(c.pi0 == c.pi0_kernel_route)) throw RouteDisagreement("the two routes to Pi0 differ");
    c.betti = betti_numbers(c.pi0);

    try {
        c.spectrum = spectral_decompose(c.box0);
    } catch (const EigenvaluesNotInField& e) {
        c.spectrum_error = e.what();
    }

    c.box = build_box(c.d, c.d0);
    c.B = c.box - c.box0;
    if (strict && !strictly_increases_weight(weight_profile(c.B)))
        throw WeightCheckFailed("Box - Box0 does not strictly increase weights");

    c.resolvent_direct = build_resolvent(c.box0, c.box, ResolventRoute::direct, nullptr);
    c.P_direct = build_P(c.resolvent_direct);
    if (c.spectrum) {
        c.resolvent_spectral = build_resolvent(c.box0, c.box, ResolventRoute::spectral, &*c.spectrum);
        c.P_spectral = build_P(*c.resolvent_spectral);
        if (strict && !(*c.resolvent_spectral == c.resolvent_direct))
            throw RouteDisagreement("spectral and direct resolvents differ");
    }
    const bool use_spectral = options.resolvent == ResolventRoute::spectral && c.spectrum.has_value();
    c.P = use_spectral ? c.P_spectral : c.P_direct;

    c.l = build_L(c.P, c.pi0);
    c.dc_split = build_D_and_C(c.l, c.d, c.pi0);
    c.rumin = build_rumin_dc(c.d, c.d0, c.d0_inv, c.pi0);
    c.gh = build_g_and_h(c.dc_split.C, c.d0, c.box0, c.pi0, c.l);
    return c;
}

} // namespace rumin
