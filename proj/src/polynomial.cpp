#include "rumin/polynomial.hpp"

#include "rumin/error.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

namespace rumin {

Symbol Symbol::intern(std::string_view name) {
    static std::mutex mutex;
    static std::unordered_map<std::string, std::unique_ptr<std::string>> table;
    std::lock_guard lock(mutex);
    auto it = table.find(std::string(name));
    if (it == table.end()) {
        auto owned = std::make_unique<std::string>(name);
        it = table.emplace(std::string(name), std::move(owned)).first;
    }
    return Symbol(it->second.get());
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Symbol s, unsigned e) {
    if (e > 0) factors_.emplace_back(s, e);
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

unsigned Monomial::exponent(Symbol s) const {
    for (const auto& f : factors_)
        if (f.first == s) return f.second;
    return 0;
}

Monomial Monomial::without(Symbol s) const {
    Monomial r;
    for (const auto& f : factors_)
        if (!(f.first == s)) r.factors_.push_back(f);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            r.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            r.factors_.push_back(*j++);
        } else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& b, const Monomial& a) {
    for (const auto& f : b.factors_)
        if (a.exponent(f.first) < f.second) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& f : a.factors_) {
        unsigned e = f.second - b.exponent(f.first);
        if (e > 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& f : a.factors_) {
        unsigned e = std::min(f.second, b.exponent(f.first));
        if (e > 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) s += '*';
        s += f.first.name();
        if (f.second > 1) s += '^' + std::to_string(f.second);
    }
    return s.empty() ? "1" : s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (!(fa[i].first == fb[i].first)) {
            // The side holding the name-smaller parameter is larger.
            return fb[i].first < fa[i].first;
        }
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Polynomial::Polynomial(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, const mpz_class& c) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(Symbol s) { return Polynomial(Monomial(s), 1); }

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpz_class Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

bool Polynomial::contains(Symbol s) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(s) > 0) return true;
    return false;
}

unsigned Polynomial::degree_in(Symbol s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

bool Polynomial::max_symbol(Symbol& out) const {
    bool found = false;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) {
            if (!found || out < f.first) {
                out = f.first;
                found = true;
            }
        }
    }
    return found;
}

std::vector<Symbol> Polynomial::symbols() const {
    std::vector<Symbol> out;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors())
            if (std::find(out.begin(), out.end(), f.first) == out.end()) out.push_back(f.first);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
    std::vector<Polynomial> out(degree_in(s) + 1);
    for (const auto& [m, c] : terms_) out[m.exponent(s)].add_term(m.without(s), c);
    return out;
}

Polynomial Polynomial::from_coefficients_in(Symbol s, const std::vector<Polynomial>& coeffs) {
    Polynomial r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial xi(s, static_cast<unsigned>(i));
        for (const auto& [m, c] : coeffs[i].terms_) r.add_term(m * xi, c);
    }
    return r;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::divexact(const mpz_class& d) const {
    if (d == 0) throw DivisionByZero("polynomial divided by zero");
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw InternalCheckFailed("inexact integer division of polynomial");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.terms_.emplace_hint(r.terms_.end(), m, q);
    }
    return r;
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial divided by zero");
    if (d.is_constant()) return divexact(d.constant_term());
    Polynomial q;
    Polynomial r = *this;
    const Monomial& lm = d.leading_monomial();
    const mpz_class& lc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        const mpz_class& rc = r.leading_coefficient();
        if (!Monomial::divides(lm, rm) || !mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t()))
            throw InternalCheckFailed("inexact polynomial division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lc.get_mpz_t());
        Polynomial t(Monomial::quotient(rm, lm), c);
        q += t;
        r -= t * d;
    }
    return q;
}

Polynomial Polynomial::substitute(Symbol s, const Polynomial& value) const {
    if (!contains(s)) return *this;
    auto coeffs = coefficients_in(s);
    // Horner
    Polynomial r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
    return r;
}

std::pair<Polynomial, mpz_class> Polynomial::evaluate(const std::map<Symbol, mpq_class>& values) const {
    // Accumulate with rational coefficients, then clear denominators.
    std::map<Monomial, mpq_class, GrlexLess> acc;
    for (const auto& [m, c] : terms_) {
        mpq_class coeff(c);
        Monomial rest;
        for (const auto& [sym, e] : m.factors()) {
            auto it = values.find(sym);
            if (it == values.end()) {
                rest = rest * Monomial(sym, e);
            } else {
                mpq_class p = 1;
                for (unsigned k = 0; k < e; ++k) p *= it->second;
                coeff *= p;
            }
        }
        acc[rest] += coeff;
    }
    mpz_class den = 1;
    for (const auto& [m, c] : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Polynomial num;
    for (const auto& [m, c] : acc) {
        if (c == 0) continue;
        mpq_class scaled = c * den;
        num.add_term(m, scaled.get_num());
    }
    return {num, den};
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpz_class a = abs(c);
        bool negative = c < 0;
        if (s.empty()) {
            if (negative) s += '-';
        } else {
            s += negative ? '-' : '+';
        }
        if (m.is_one()) {
            s += a.get_str();
        } else if (a == 1) {
            s += m.to_string();
        } else {
            s += a.get_str() + "*" + m.to_string();
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Polynomial positive(Polynomial p) {
    if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
    return p;
}

using Coeffs = std::vector<Polynomial>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Polynomial content_of(const Coeffs& c) {
    Polynomial g;
    for (const auto& p : c) {
        g = gcd(g, p);
        if (g.is_constant() && g.constant_term() == 1) break;
    }
    return g;
}

Coeffs divexact_all(const Coeffs& c, const Polynomial& d) {
    Coeffs r;
    r.reserve(c.size());
    for (const auto& p : c) r.push_back(p.divexact(d));
    return r;
}

// Pseudo-remainder of a by b, both univariate with polynomial coefficients.
Coeffs prem(Coeffs a, const Coeffs& b) {
    const std::size_t db = b.size() - 1;
    const Polynomial& lcb = b.back();
    if (a.size() < b.size()) return a;
    std::size_t e = a.size() - b.size() + 1;
    while (!a.empty() && a.size() - 1 >= db) {
        Polynomial lca = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& p : a) p = p * lcb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= lca * b[i];
        trim(a);
        --e;
    }
    if (e > 0) {
        Polynomial f = lcb.pow(static_cast<unsigned>(e));
        for (auto& p : a) p = p * f;
    }
    return a;
}

Polynomial gcd_with_term(const Polynomial& term, const Polynomial& other) {
    const auto& [tm, tc] = *term.terms().begin();
    mpz_class g = abs(tc);
    Monomial m = tm;
    for (const auto& [om, oc] : other.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), oc.get_mpz_t());
        m = Monomial::gcd(m, om);
    }
    return Polynomial(m, g);
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    if (a.is_term()) return gcd_with_term(a, b);
    if (b.is_term()) return gcd_with_term(b, a);

    Symbol x = Symbol::intern("");
    Symbol xa = x, xb = x;
    bool ha = a.max_symbol(xa);
    bool hb = b.max_symbol(xb);
    if (!ha || !hb) {
        // One side is an integer constant (handled as a term above unless zero).
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return Polynomial(g);
    }
    x = xa < xb ? xb : xa;
    if (!a.contains(x)) return gcd(a, content_of(b.coefficients_in(x)));
    if (!b.contains(x)) return gcd(content_of(a.coefficients_in(x)), b);

    Coeffs ca = a.coefficients_in(x);
    Coeffs cb = b.coefficients_in(x);
    Polynomial conta = content_of(ca);
    Polynomial contb = content_of(cb);
    Polynomial g = gcd(conta, contb);
    Coeffs pa = divexact_all(ca, conta);
    Coeffs pb = divexact_all(cb, contb);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (true) {
        Coeffs r = prem(pa, pb);
        trim(r);
        if (r.empty()) break;
        if (r.size() == 1) {
            pb = Coeffs{Polynomial(1)};
            break;
        }
        pa = std::move(pb);
        pb = divexact_all(r, content_of(r));
    }
    Polynomial prim = Polynomial::from_coefficients_in(x, divexact_all(pb, content_of(pb)));
    return positive(g * prim);
}

} // namespace rumin
