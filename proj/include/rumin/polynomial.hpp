#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rumin {

/// Interned parameter name. Equality is pointer identity; ordering is by name.
class Symbol {
public:
    static Symbol intern(std::string_view name);

    const std::string& name() const { return *name_; }

    friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
    friend bool operator<(Symbol a, Symbol b) { return a.name_ != b.name_ && *a.name_ < *b.name_; }

private:
    explicit Symbol(const std::string* name) : name_(name) {}
    const std::string* name_;
};

/// Power product of parameters, factors sorted by name, all exponents positive.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(Symbol s, unsigned e = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    unsigned exponent(Symbol s) const;

    /// Removes the factor in `s` entirely.
    Monomial without(Symbol s) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b when b divides a.
    static bool divides(const Monomial& b, const Monomial& a);
    static Monomial quotient(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order: total degree first, then lexicographic with
/// parameters ordered by name.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with arbitrary-precision integer coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, mpz_class, GrlexLess>;

    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor)
    Polynomial(const mpz_class& c);  // NOLINT(google-explicit-constructor)
    Polynomial(const Monomial& m, const mpz_class& c);
    static Polynomial variable(Symbol s);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_term() const { return terms_.size() == 1; }
    /// Constant coefficient (0 when absent).
    mpz_class constant_term() const;
    unsigned total_degree() const;
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const mpz_class& leading_coefficient() const { return terms_.rbegin()->second; }

    bool contains(Symbol s) const;
    unsigned degree_in(Symbol s) const;
    /// Largest parameter (by name) that appears, if any.
    bool max_symbol(Symbol& out) const;
    std::vector<Symbol> symbols() const;

    /// Coefficients of this polynomial viewed as univariate in `s` (index = power).
    std::vector<Polynomial> coefficients_in(Symbol s) const;
    static Polynomial from_coefficients_in(Symbol s, const std::vector<Polynomial>& coeffs);

    /// Integer gcd of all coefficients, non-negative.
    mpz_class content() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned e) const;

    /// Exact quotient; throws InternalCheckFailed if `d` does not divide this.
    Polynomial divexact(const Polynomial& d) const;
    Polynomial divexact(const mpz_class& d) const;

    /// Replaces `s` by the polynomial `value`.
    Polynomial substitute(Symbol s, const Polynomial& value) const;

    /// Substitutes rationals for the bound parameters. Result is num / den with
    /// den a positive integer.
    std::pair<Polynomial, mpz_class> evaluate(const std::map<Symbol, mpq_class>& values) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending grlex order, e.g. "t^2-2*t*s+1".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpz_class& c);
    Terms terms_;
};

/// Greatest common divisor in Z[params]; result has positive leading coefficient
/// (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace rumin
