#include "rumin/zrational.hpp"

#include "rumin/error.hpp"

namespace rumin {

ZPolynomial::ZPolynomial(const RationalFunction& c) {
    if (!c.is_zero()) c_.push_back(c);
}

ZPolynomial::ZPolynomial(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPolynomial ZPolynomial::z() { return ZPolynomial({RationalFunction(), RationalFunction(1)}); }

void ZPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ZPolynomial ZPolynomial::operator-() const {
    ZPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPolynomial operator+(const ZPolynomial& a, const ZPolynomial& b) {
    std::vector<RationalFunction> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ZPolynomial(std::move(c));
}

ZPolynomial operator-(const ZPolynomial& a, const ZPolynomial& b) { return a + (-b); }

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RationalFunction> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPolynomial(std::move(c));
}

ZPolynomial ZPolynomial::scaled(const RationalFunction& k) const {
    if (k.is_zero()) return {};
    ZPolynomial r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

ZPolynomial ZPolynomial::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return scaled(RationalFunction(1) / leading());
}

std::pair<ZPolynomial, ZPolynomial> ZPolynomial::divmod(const ZPolynomial& a, const ZPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero in z");
    ZPolynomial r = a;
    if (r.degree() < b.degree()) return {ZPolynomial(), r};
    std::vector<RationalFunction> q(r.c_.size() - b.c_.size() + 1);
    RationalFunction inv = RationalFunction(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = r.c_.size() - b.c_.size();
        RationalFunction f = r.leading() * inv;
        q[shift] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[shift + j] -= f * b.c_[j];
        r.c_.pop_back();
        r.trim();
    }
    return {ZPolynomial(std::move(q)), r};
}

ZPolynomial ZPolynomial::gcd(ZPolynomial a, ZPolynomial b) {
    while (!b.is_zero()) {
        ZPolynomial r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

RationalFunction ZPolynomial::evaluate(const RationalFunction& x) const {
    RationalFunction v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::string ZPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string coeff = c_[i].to_string();
        bool negative = coeff[0] == '-';
        if (!c_[i].is_atomic() && !(negative && (-c_[i]).is_atomic())) {
            coeff = "(" + coeff + ")";
            negative = false;
        } else if (negative) {
            coeff = coeff.substr(1);
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (coeff == "1")
            term = mono;
        else
            term = coeff + "*" + mono;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? "-" : "+") + term;
    }
    return out;
}

ZRationalFunction::ZRationalFunction(const ZPolynomial& num, const ZPolynomial& den) : num_(num), den_(den) {
    normalize();
}

ZRationalFunction ZRationalFunction::z() { return ZRationalFunction(ZPolynomial::z(), RationalFunction(1)); }

void ZRationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator in z");
    if (num_.is_zero()) {
        den_ = RationalFunction(1);
        return;
    }
    if (den_.degree() > 0) {
        ZPolynomial g = ZPolynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = ZPolynomial::divmod(num_, g).first;
            den_ = ZPolynomial::divmod(den_, g).first;
        }
    }
    if (!den_.leading().is_one()) {
        RationalFunction inv = RationalFunction(1) / den_.leading();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ZRationalFunction ZRationalFunction::operator-() const {
    ZRationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

ZRationalFunction& ZRationalFunction::operator+=(const ZRationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

ZRationalFunction& ZRationalFunction::operator-=(const ZRationalFunction& o) { return *this += -o; }

ZRationalFunction& ZRationalFunction::operator*=(const ZRationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ZRationalFunction();
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        num_ = num_ * o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ZRationalFunction& ZRationalFunction::operator/=(const ZRationalFunction& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero in z");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

std::string ZRationalFunction::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.degree() > 0 || n.find_first_of("+-", 1) != std::string::npos) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

RationalFunction residue_at_zero(const ZRationalFunction& f) {
    const auto& den = f.denominator().coefficients();
    std::size_t m = 0;
    while (m < den.size() && den[m].is_zero()) ++m;
    if (m == 0 || f.is_zero()) return RationalFunction();
    // den = z^m q with q(0) != 0; Taylor coefficients of num / q up to order m-1.
    std::vector<RationalFunction> q(den.begin() + static_cast<std::ptrdiff_t>(m), den.end());
    const ZPolynomial& num = f.numerator();
    RationalFunction inv_q0 = RationalFunction(1) / q[0];
    std::vector<RationalFunction> s(m);
    for (std::size_t i = 0; i < m; ++i) {
        RationalFunction acc = num.coefficient(i);
        for (std::size_t j = 1; j <= i && j < q.size(); ++j) acc -= q[j] * s[i - j];
        s[i] = acc * inv_q0;
    }
    return s[m - 1];
}

} // namespace rumin
