#pragma once

#include "rumin/lie_algebra.hpp"
#include "rumin/rational_function.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rumin {

/// Exponent vector (e_1, ..., e_n) of the PBW monomial X_1^e_1 ... X_n^e_n.
using PbwMonomial = std::vector<unsigned>;

unsigned pbw_degree(const PbwMonomial& m);

/// Graded order, lowest degree first; within a degree X_1^2 < X_1 X_2 < X_2^2.
struct PbwOrder {
    bool operator()(const PbwMonomial& a, const PbwMonomial& b) const;
};

/// "X1^2.X3"; the empty monomial prints as "1".
std::string pbw_monomial_string(const PbwMonomial& m);

/// Element of U(g) in PBW normal form. A default-constructed element is the
/// zero scalar; scalars carry no algebra and combine with any element.
class PbwElement {
public:
    using Terms = std::map<PbwMonomial, RationalFunction, PbwOrder>;

    PbwElement() = default;
    PbwElement(const RationalFunction& c);  // NOLINT(google-explicit-constructor)
    PbwElement(long c) : PbwElement(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
    static PbwElement generator(const Algebra& alg, int i);
    static PbwElement monomial(const Algebra& alg, const PbwMonomial& m, const RationalFunction& c);

    /// Accepts "Xi" generators, parameters, integers, + - * . / ^ and parentheses.
    static PbwElement parse(const Algebra& alg, std::string_view text);

    const Algebra& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Differential order: max total degree over terms (0 for zero).
    unsigned order() const;
    bool is_scalar() const { return order() == 0; }
    /// Scalar part (coefficient of the empty monomial).
    RationalFunction scalar_part() const;

    PbwElement operator-() const;
    PbwElement& operator+=(const PbwElement& o);
    PbwElement& operator-=(const PbwElement& o);
    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);
    PbwElement scaled(const RationalFunction& c) const;

    friend bool operator==(const PbwElement& a, const PbwElement& b) { return a.terms_ == b.terms_; }

    /// Anti-automorphism with X_i -> -X_i.
    PbwElement antipode() const;

    /// Applies `f` to every coefficient.
    template <typename F>
    PbwElement map_coefficients(F&& f) const {
        PbwElement r;
        r.alg_ = alg_;
        for (const auto& [m, c] : terms_) {
            RationalFunction v = f(c);
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    std::string to_string() const;

private:
    static const Algebra& join(const PbwElement& a, const PbwElement& b);
    Algebra alg_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PbwElement& e);

namespace detail {
/// u * X_j in normal form, memoised per algebra.
const std::vector<std::pair<PbwMonomial, RationalFunction>>& right_multiply(const LieAlgebra& alg,
                                                                            const PbwMonomial& u, int j);
} // namespace detail

} // namespace rumin
