#pragma once

#include "rumin/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rumin {

/// Element of Q(t1, ..., tm): a reduced fraction of integer polynomials whose
/// denominator has positive leading coefficient under grlex. The canonical form
/// is unique, so equality is structural.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction parameter(std::string_view name);

    /// Grammar: integers, parameter names, + - * / ^ and parentheses.
    static RationalFunction parse(std::string_view text);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_ == Polynomial(1); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Value when free of parameters.
    std::optional<mpq_class> constant_value() const;
    std::vector<Symbol> parameters() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// Exact value with every parameter bound. Throws DenominatorVanishes.
    mpq_class specialize(const std::map<std::string, mpq_class>& bindings) const;
    /// Partial substitution; unbound parameters stay symbolic.
    RationalFunction substitute(const std::map<std::string, mpq_class>& bindings) const;

    std::string to_string() const;
    /// True when to_string() can be used as a factor without parentheses.
    bool is_atomic() const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Parses "p=v" style values such as "2", "-3/4".
mpq_class parse_rational(std::string_view text);

} // namespace rumin
