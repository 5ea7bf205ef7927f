#pragma once

#include "rumin/rational_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rumin {

/// Univariate polynomial in z with RationalFunction coefficients (index = power).
class ZPolynomial {
public:
    ZPolynomial() = default;
    ZPolynomial(const RationalFunction& c);  // NOLINT(google-explicit-constructor)
    explicit ZPolynomial(std::vector<RationalFunction> coeffs);
    static ZPolynomial z();

    const std::vector<RationalFunction>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RationalFunction& leading() const { return c_.back(); }
    RationalFunction coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : RationalFunction(); }

    ZPolynomial operator-() const;
    friend ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b);
    friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
    ZPolynomial scaled(const RationalFunction& c) const;
    ZPolynomial monic() const;

    /// Euclidean division; returns (quotient, remainder).
    static std::pair<ZPolynomial, ZPolynomial> divmod(const ZPolynomial& a, const ZPolynomial& b);
    /// Monic gcd.
    static ZPolynomial gcd(ZPolynomial a, ZPolynomial b);

    /// Value at z = x.
    RationalFunction evaluate(const RationalFunction& x) const;

    friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<RationalFunction> c_;
};

/// Reduced fraction of ZPolynomials with monic denominator.
class ZRationalFunction {
public:
    ZRationalFunction() : den_(RationalFunction(1)) {}
    ZRationalFunction(const RationalFunction& c) : num_(c), den_(RationalFunction(1)) {}  // NOLINT
    ZRationalFunction(const ZPolynomial& num, const ZPolynomial& den);
    static ZRationalFunction z();

    const ZPolynomial& numerator() const { return num_; }
    const ZPolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    ZRationalFunction operator-() const;
    ZRationalFunction& operator+=(const ZRationalFunction& o);
    ZRationalFunction& operator-=(const ZRationalFunction& o);
    ZRationalFunction& operator*=(const ZRationalFunction& o);
    ZRationalFunction& operator/=(const ZRationalFunction& o);
    friend ZRationalFunction operator+(ZRationalFunction a, const ZRationalFunction& b) { return a += b; }
    friend ZRationalFunction operator-(ZRationalFunction a, const ZRationalFunction& b) { return a -= b; }
    friend ZRationalFunction operator*(ZRationalFunction a, const ZRationalFunction& b) { return a *= b; }
    friend ZRationalFunction operator/(ZRationalFunction a, const ZRationalFunction& b) { return a /= b; }

    friend bool operator==(const ZRationalFunction&, const ZRationalFunction&) = default;

    std::string to_string() const;

private:
    void normalize();
    ZPolynomial num_;
    ZPolynomial den_;
};

/// Coefficient of z^-1 in the Laurent expansion at z = 0.
RationalFunction residue_at_zero(const ZRationalFunction& f);

} // namespace rumin
