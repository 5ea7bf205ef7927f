#include "rumin/spectral.hpp"

#include "rumin/error.hpp"

#include <algorithm>
#include <set>

namespace rumin {

namespace {

constexpr unsigned long kMaxDivisorSearch = 10'000'000UL;

ZPolynomial derivative(const ZPolynomial& p) {
    std::vector<RationalFunction> c;
    for (std::size_t i = 1; i < p.coefficients().size(); ++i)
        c.push_back(p.coefficients()[i] * RationalFunction(static_cast<long>(i)));
    return ZPolynomial(std::move(c));
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) return {};
    mpz_class root = sqrt(n);
    if (root > kMaxDivisorSearch)
        throw EigenvaluesNotInField("characteristic polynomial coefficients too large for rational root search");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d <= root; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Rational roots of a polynomial with rational coefficients.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
    std::vector<mpq_class> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::vector<mpq_class> roots;
    if (c.size() <= 1) return roots;
    mpz_class den = 1;
    for (const auto& x : c) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> z;
    for (const auto& x : c) z.push_back(mpz_class(x * den));
    std::size_t shift = 0;
    while (z[shift] == 0) ++shift;
    if (shift > 0) roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
    if (z.size() <= 1) return roots;
    auto eval = [&](const mpq_class& x) {
        mpq_class v = 0;
        for (auto it = z.rbegin(); it != z.rend(); ++it) v = v * x + mpq_class(*it);
        return v;
    };
    for (const auto& p : positive_divisors(z.front()))
        for (const auto& q : positive_divisors(z.back()))
            for (int sign : {1, -1}) {
                mpq_class x(sign * p, q);
                x.canonicalize();
                if (std::find(roots.begin(), roots.end(), x) == roots.end() && eval(x) == 0) roots.push_back(x);
            }
    return roots;
}

Polynomial lcm_poly(const Polynomial& a, const Polynomial& b) {
    return (a * b).divexact(gcd(a, b));
}

/// Truncated power series in u with rational coefficients.
using Series = std::vector<mpq_class>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    Series r(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<RationalFunction> roots_one_parameter(const ZPolynomial& p, Symbol t) {
    const int d = p.degree();
    // Scale to a monic polynomial Q(mu) = c^d p(mu / c) with coefficients in Z[t].
    Polynomial c(1);
    for (const auto& coeff : p.coefficients()) c = lcm_poly(c, coeff.denominator());
    std::vector<Polynomial> b(static_cast<std::size_t>(d) + 1);  // b[i] multiplies mu^{d-i}
    Polynomial cp(1);
    for (int i = 0; i <= d; ++i) {
        RationalFunction v = p.coefficient(static_cast<std::size_t>(d - i)) * RationalFunction(cp);
        if (!v.is_polynomial() || !(v.denominator() == Polynomial(1)))
            throw InternalCheckFailed("scaled characteristic polynomial is not integral");
        b[static_cast<std::size_t>(i)] = v.numerator();
        cp = cp * c;
    }
    unsigned bound = 0;
    for (int i = 1; i <= d; ++i) bound = std::max(bound, b[static_cast<std::size_t>(i)].degree_in(t) / static_cast<unsigned>(i));
    const std::size_t len = bound + 1;

    Symbol u = Symbol::intern("__lift_u");
    for (long a = 3; a < 200; a += 2) {
        std::map<Symbol, mpq_class> at{{t, mpq_class(a)}};
        std::vector<mpq_class> qa(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) {
            auto [num, den] = b[static_cast<std::size_t>(i)].evaluate(at);
            qa[static_cast<std::size_t>(d - i)] = mpq_class(num.constant_term(), den);
        }
        std::vector<RationalFunction> qa_rf(qa.begin(), qa.end());
        ZPolynomial qa_poly(qa_rf);
        if (ZPolynomial::gcd(qa_poly, derivative(qa_poly)).degree() > 0) continue;

        // Coefficients of b_i(u + a) as series in u.
        std::vector<Series> bs(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) {
            Polynomial shifted = b[static_cast<std::size_t>(i)].substitute(t, Polynomial::variable(u) + Polynomial(a));
            auto cu = shifted.coefficients_in(u);
            Series s(len, 0);
            for (std::size_t k = 0; k < cu.size() && k < len; ++k) s[k] = mpq_class(cu[k].constant_term());
            bs[static_cast<std::size_t>(i)] = s;
        }
        ZPolynomial dq = derivative(qa_poly);
        std::vector<RationalFunction> out;
        for (const auto& r0 : rational_roots(qa)) {
            mpq_class slope = *dq.evaluate(RationalFunction(r0)).constant_value();
            Series r(len, 0);
            r[0] = r0;
            for (std::size_t k = 1; k < len; ++k) {
                Series v = bs[0];
                for (int i = 1; i <= d; ++i) {
                    v = series_mul(v, r, len);
                    for (std::size_t j = 0; j < len; ++j) v[j] += bs[static_cast<std::size_t>(i)][j];
                }
                r[k] = -v[k] / slope;
            }
            // r(t) = sum r_k (t - a)^k, then verify exactly.
            RationalFunction root;
            RationalFunction shift = RationalFunction(Polynomial::variable(t)) - RationalFunction(a);
            for (std::size_t k = len; k-- > 0;) root = root * shift + RationalFunction(r[k]);
            RationalFunction check(1);
            for (int i = 1; i <= d; ++i) check = check * root + RationalFunction(b[static_cast<std::size_t>(i)]);
            if (check.is_zero()) out.push_back(root / RationalFunction(c));
        }
        return out;
    }
    throw EigenvaluesNotInField("no squarefree specialisation found for the characteristic polynomial");
}

} // namespace

bool eigenvalue_less(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() != b.is_zero()) return a.is_zero();
    unsigned da = a.numerator().total_degree() + a.denominator().total_degree();
    unsigned db = b.numerator().total_degree() + b.denominator().total_degree();
    if (da != db) return da < db;
    auto ca = a.constant_value(), cb = b.constant_value();
    if (ca && cb) return *ca < *cb;
    return a.to_string() < b.to_string();
}

ZPolynomial squarefree_part(const ZPolynomial& p) {
    if (p.degree() <= 0) return p.monic();
    ZPolynomial g = ZPolynomial::gcd(p, derivative(p));
    return ZPolynomial::divmod(p, g).first.monic();
}

std::vector<RationalFunction> field_roots(const ZPolynomial& p) {
    if (p.degree() <= 0) return {};
    std::set<Symbol> symbols;
    for (const auto& c : p.coefficients())
        for (Symbol s : c.parameters()) symbols.insert(s);
    std::vector<RationalFunction> roots;
    if (symbols.empty()) {
        std::vector<mpq_class> q;
        for (const auto& c : p.coefficients()) q.push_back(*c.constant_value());
        for (const auto& r : rational_roots(q)) roots.emplace_back(r);
    } else if (symbols.size() == 1) {
        roots = roots_one_parameter(p.monic(), *symbols.begin());
    } else {
        throw EigenvaluesNotInField("eigenvalue search over several parameters is not supported");
    }
    if (static_cast<int>(roots.size()) < p.degree())
        throw EigenvaluesNotInField("characteristic polynomial " + p.to_string() +
                                    " has irreducible factors of degree >= 2");
    std::sort(roots.begin(), roots.end(), eigenvalue_less);
    return roots;
}

std::vector<Eigenspace> spectral_decompose(const ScalarMatrix& m) {
    if (!m.square()) throw ShapeMismatch("spectral decomposition of non-square matrix");
    if (m.rows() == 0) return {};
    auto roots = field_roots(squarefree_part(characteristic_polynomial(m)));
    const std::size_t n = m.rows();
    std::vector<Eigenspace> out;
    for (const auto& lambda : roots) {
        ScalarMatrix proj = ScalarMatrix::identity(n);
        for (const auto& mu : roots) {
            if (mu == lambda) continue;
            ScalarMatrix f = m;
            for (std::size_t i = 0; i < n; ++i) f(i, i) -= mu;
            RationalFunction inv = RationalFunction(1) / (lambda - mu);
            proj = (proj * f).map([&](const RationalFunction& x) { return x * inv; });
        }
        out.push_back({lambda, std::move(proj)});
    }
    return out;
}

} // namespace rumin
