#include "rumin/rational_function.hpp"

#include "rumin/detail/expression.hpp"
#include "rumin/error.hpp"

#include <ostream>

namespace rumin {

namespace {

struct RationalOps {
    using Value = RationalFunction;
    Value integer(const mpz_class& c) const { return Value(c); }
    Value identifier(const std::string& name) const { return Value::parameter(name); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const { return a / b; }
    Value neg(const Value& a) const { return -a; }
    Value pow(const Value& a, unsigned e) const { return a.pow(static_cast<int>(e)); }
};

std::map<Symbol, mpq_class> to_symbols(const std::map<std::string, mpq_class>& bindings) {
    std::map<Symbol, mpq_class> out;
    for (const auto& [name, value] : bindings) out.emplace(Symbol::intern(name), value);
    return out;
}

} // namespace

RationalFunction::RationalFunction(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    normalize();
}

RationalFunction RationalFunction::parameter(std::string_view name) {
    return RationalFunction(Polynomial::variable(Symbol::intern(name)));
}

RationalFunction RationalFunction::parse(std::string_view text) {
    RationalOps ops;
    return detail::ExpressionParser<RationalOps>(text, ops).parse();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!(den_.is_constant() && den_.constant_term() == 1)) {
        Polynomial g = gcd(num_, den_);
        if (!(g.is_constant() && g.constant_term() == 1)) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    if (den_.leading_coefficient() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<mpq_class> RationalFunction::constant_value() const {
    if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
    mpq_class q(num_.constant_term(), den_.constant_term());
    q.canonicalize();
    return q;
}

std::vector<Symbol> RationalFunction::parameters() const {
    auto a = num_.symbols();
    for (Symbol s : den_.symbols())
        if (std::find(a.begin(), a.end(), s) == a.end()) a.push_back(s);
    std::sort(a.begin(), a.end());
    return a;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.is_constant() && den_.constant_term() == 1) return *this;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    const bool unit_a = den_.is_constant() && den_.constant_term() == 1;
    const bool unit_b = o.den_.is_constant() && o.den_.constant_term() == 1;
    if (unit_a && unit_b) {
        num_ = num_ * o.num_;
        return *this;
    }
    Polynomial g1 = unit_b ? Polynomial(1) : gcd(num_, o.den_);
    Polynomial g2 = unit_a ? Polynomial(1) : gcd(o.num_, den_);
    num_ = num_.divexact(g1) * o.num_.divexact(g2);
    den_ = den_.divexact(g2) * o.den_.divexact(g1);
    if (den_.leading_coefficient() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZero("division of " + to_string() + " by zero");
    RationalFunction inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.leading_coefficient() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return RationalFunction(1) / pow(-e);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

mpq_class RationalFunction::specialize(const std::map<std::string, mpq_class>& bindings) const {
    for (Symbol s : parameters())
        if (!bindings.count(s.name())) throw UnboundParameter("parameter '" + s.name() + "' is not bound");
    RationalFunction r = substitute(bindings);
    return *r.constant_value();
}

RationalFunction RationalFunction::substitute(const std::map<std::string, mpq_class>& bindings) const {
    auto values = to_symbols(bindings);
    auto [pn, dn] = num_.evaluate(values);
    auto [pd, dd] = den_.evaluate(values);
    if (pd.is_zero()) throw DenominatorVanishes("denominator of " + to_string() + " vanishes");
    return RationalFunction(pn * Polynomial(dd), pd * Polynomial(dn));
}

bool RationalFunction::is_atomic() const {
    return den_ == Polynomial(1) && num_.is_term() && num_.leading_coefficient() > 0;
}

std::string RationalFunction::to_string() const {
    if (den_ == Polynomial(1)) return num_.to_string();
    std::string n = num_.to_string();
    if (!num_.is_term()) n = "(" + n + ")";
    std::string d = den_.to_string();
    bool den_atomic = den_.is_constant() ||
                      (den_.is_term() && den_.leading_coefficient() == 1 && den_.leading_monomial().factors().size() == 1);
    if (!den_atomic) d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

mpq_class parse_rational(std::string_view text) {
    auto v = RationalFunction::parse(text).constant_value();
    if (!v) throw ParseError("expected a rational number, got \"" + std::string(text) + "\"");
    return *v;
}

} // namespace rumin
