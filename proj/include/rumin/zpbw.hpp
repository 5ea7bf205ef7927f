#pragma once

#include "rumin/pbw.hpp"
#include "rumin/zrational.hpp"

#include <map>
#include <string>

namespace rumin {

/// Finite sum of (z-rational coefficient) x (PBW monomial); z is central.
class ZPbwElement {
public:
    using Terms = std::map<PbwMonomial, ZRationalFunction, PbwOrder>;

    ZPbwElement() = default;
    ZPbwElement(long c) : ZPbwElement(ZRationalFunction(RationalFunction(c))) {}  // NOLINT
    ZPbwElement(const ZRationalFunction& c);  // NOLINT(google-explicit-constructor)
    ZPbwElement(const PbwElement& e);  // NOLINT(google-explicit-constructor)

    const Algebra& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ZPbwElement operator-() const;
    ZPbwElement& operator+=(const ZPbwElement& o);
    ZPbwElement& operator-=(const ZPbwElement& o);
    friend ZPbwElement operator+(ZPbwElement a, const ZPbwElement& b) { return a += b; }
    friend ZPbwElement operator-(ZPbwElement a, const ZPbwElement& b) { return a -= b; }
    friend ZPbwElement operator*(const ZPbwElement& a, const ZPbwElement& b);

    friend bool operator==(const ZPbwElement& a, const ZPbwElement& b) { return a.terms_ == b.terms_; }

    /// Entrywise residue at z = 0.
    PbwElement residue() const;

    std::string to_string() const;

private:
    Algebra alg_;
    Terms terms_;
};

} // namespace rumin
