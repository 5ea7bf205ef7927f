#include "rumin/operator.hpp"

#include "rumin/error.hpp"

namespace rumin {

Space make_space(const Algebra& alg) { return std::make_shared<const FormSpace>(alg); }

GradedOperator scale(const GradedOperator& t, const RationalFunction& c) {
    return t.map([&](const PbwElement& e) { return e.scaled(c); });
}

bool is_algebraic(const GradedOperator& t) {
    for (int k = t.min_degree(); k <= t.max_degree(); ++k) {
        const auto& b = t.block(k);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(i, j).order() > 0) return false;
    }
    return true;
}

ScalarMatrix scalar_block(const GradedOperator& t, int k) {
    return t.block(k).map([](const PbwElement& e) {
        if (e.order() > 0) throw NotAlgebraic("entry " + e.to_string() + " is a differential operator");
        return e.scalar_part();
    });
}

PbwMatrix to_pbw(const ScalarMatrix& m, const Algebra& alg) {
    return m.map([&](const RationalFunction& c) { return PbwElement::monomial(alg, {}, c); });
}

GradedOperator formal_adjoint(const GradedOperator& t) {
    GradedOperator r(t.space(), -t.shift());
    for (int k = t.min_degree(); k <= t.max_degree(); ++k)
        r.block(k + t.shift()) = t.block(k).transpose().map([](const PbwElement& e) { return e.antipode(); });
    return r;
}

PbwMatrix star_matrix(const FormSpace& space, int k) {
    const int n = space.dimension();
    PbwMatrix m(space.frame.size(n - k), space.frame.size(k));
    const auto& basis = space.frame.basis(k);
    for (std::size_t p = 0; p < basis.size(); ++p) {
        auto [sign, complement] = hodge_star(n, basis[p]);
        m(space.frame.position(complement), p) = PbwElement(sign);
    }
    return m;
}

GradedOperator star_conjugate(const GradedOperator& t, const SignRule& sign) {
    const auto& space = *t.space();
    const int n = space.dimension();
    const int s = t.shift();
    GradedOperator r(t.space(), -s);
    for (int src = r.min_degree(); src <= r.max_degree(); ++src) {
        const int target = src - s;
        const int inner = n - target - s;  // T acts on Omega^{n - src}
        PbwMatrix m = star_matrix(space, n - target) * t.block(inner) * star_matrix(space, src);
        if (sign(target, n) < 0) m = -m;
        r.block(src) = std::move(m);
    }
    return r;
}

int sign_d_type(int k, int n) { return ((k * n + 1) % 2 == 0) ? 1 : -1; }
int sign_box_type(int k, int n) { return ((k * (n - k)) % 2 == 0) ? 1 : -1; }

std::string to_string(WeightProfile p) {
    switch (p) {
    case WeightProfile::zero: return "zero";
    case WeightProfile::preserves: return "preserves";
    case WeightProfile::strictly_increases: return "strictly_increases";
    case WeightProfile::mixed: return "mixed";
    }
    return "mixed";
}

WeightProfile weight_profile(const GradedOperator& t) {
    const auto& frame = t.space()->frame;
    bool any = false, all_equal = true, all_greater = true;
    for (int k = t.min_degree(); k <= t.max_degree(); ++k) {
        const auto& b = t.block(k);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(i, j).is_zero()) continue;
                any = true;
                const mpq_class& wr = frame.weight(k + t.shift(), i);
                const mpq_class& wc = frame.weight(k, j);
                if (wr != wc) all_equal = false;
                if (!(wr > wc)) all_greater = false;
            }
    }
    if (!any) return WeightProfile::zero;
    if (all_equal) return WeightProfile::preserves;
    if (all_greater) return WeightProfile::strictly_increases;
    return WeightProfile::mixed;
}

bool preserves_weight(WeightProfile p) { return p == WeightProfile::zero || p == WeightProfile::preserves; }
bool strictly_increases_weight(WeightProfile p) {
    return p == WeightProfile::zero || p == WeightProfile::strictly_increases;
}

GradedOperator invert_unipotent(const GradedOperator& t) {
    if (t.shift() != 0) throw NotUnipotent("operator has shift " + std::to_string(t.shift()));
    const GradedOperator id = GradedOperator::identity(t.space());
    const GradedOperator nil = id - t;
    WeightProfile p = weight_profile(nil);
    if (!strictly_increases_weight(p))
        throw NotUnipotent("I - T has weight profile '" + to_string(p) + "'");
    const int n0 = compute_N0(*t.space()->algebra);
    GradedOperator sum = id, power = id;
    for (int j = 1; j < n0; ++j) {
        power = power * nil;
        sum = sum + power;
    }
    if (!(t * sum == id) || !(sum * t == id)) throw InternalCheckFailed("Neumann inverse does not invert the operator");
    return sum;
}

GradedOperator specialize(const GradedOperator& t, const Space& target,
                          const std::map<std::string, mpq_class>& bindings) {
    GradedOperator r(target, t.shift());
    for (int k = t.min_degree(); k <= t.max_degree(); ++k)
        r.block(k) = t.block(k).map([&](const PbwElement& e) {
            PbwElement out;
            for (const auto& [m, c] : e.terms()) out += PbwElement::monomial(target->algebra, m, c.substitute(bindings));
            return out;
        });
    return r;
}

std::optional<Difference> first_difference(const GradedOperator& a, const GradedOperator& b) {
    if (a.shift() != b.shift()) return Difference{-1, 0, 0, "shifts differ"};
    for (int k = a.min_degree(); k <= a.max_degree(); ++k) {
        const auto& x = a.block(k);
        const auto& y = b.block(k);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (!(x(i, j) == y(i, j))) return Difference{k, i, j, (x(i, j) - y(i, j)).to_string()};
    }
    return std::nullopt;
}

} // namespace rumin
