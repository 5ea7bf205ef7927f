#include "rumin/pbw.hpp"

#include "rumin/detail/expression.hpp"
#include "rumin/detail/pbw_cache.hpp"
#include "rumin/error.hpp"

#include <ostream>

namespace rumin {

unsigned pbw_degree(const PbwMonomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool PbwOrder::operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    unsigned da = pbw_degree(a), db = pbw_degree(b);
    if (da != db) return da < db;
    // Vectors may differ in length only for the empty monomial of a scalar.
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ea = i < a.size() ? a[i] : 0;
        unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

std::string pbw_monomial_string(const PbwMonomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += ".";
        out += "X" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

namespace detail {

namespace {

using Accumulator = std::map<PbwMonomial, RationalFunction, PbwOrder>;

void accumulate(Accumulator& acc, const PbwMonomial& m, const RationalFunction& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

} // namespace

const std::vector<std::pair<PbwMonomial, RationalFunction>>& right_multiply(const LieAlgebra& alg,
                                                                            const PbwMonomial& u, int j) {
    PbwCache& cache = alg.pbw_cache();
    auto key = std::make_pair(u, j);
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.products.find(key);
        if (it != cache.products.end()) return it->second;
    }
    int k = -1;
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i)
        if (u[static_cast<std::size_t>(i)] > 0) {
            k = i;
            break;
        }
    PbwCache::Terms result;
    if (k <= j) {
        PbwMonomial m = u;
        m[static_cast<std::size_t>(j)] += 1;
        result.emplace_back(std::move(m), RationalFunction(1));
    } else {
        // u = u' X_k with k > j:  u' X_k X_j = (u' X_j) X_k - sum_l c_{jk}^l u' X_l.
        PbwMonomial up = u;
        up[static_cast<std::size_t>(k)] -= 1;
        Accumulator acc;
        for (const auto& [m, c] : right_multiply(alg, up, j))
            for (const auto& [m2, c2] : right_multiply(alg, m, k)) accumulate(acc, m2, c * c2);
        for (int l = 0; l < alg.dimension(); ++l) {
            const RationalFunction& cjk = alg.structure_constant(j, k, l);
            if (cjk.is_zero()) continue;
            for (const auto& [m, c] : right_multiply(alg, up, l)) accumulate(acc, m, -(cjk * c));
        }
        result.assign(acc.begin(), acc.end());
    }
    std::lock_guard lock(cache.mutex);
    return cache.products.try_emplace(std::move(key), std::move(result)).first->second;
}

} // namespace detail

PbwElement::PbwElement(const RationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(PbwMonomial{}, c);
}

PbwElement PbwElement::generator(const Algebra& alg, int i) {
    if (i < 0 || i >= alg->dimension())
        throw ParseError("generator X" + std::to_string(i + 1) + " outside X1..X" + std::to_string(alg->dimension()));
    PbwMonomial m(static_cast<std::size_t>(alg->dimension()), 0);
    m[static_cast<std::size_t>(i)] = 1;
    return monomial(alg, m, RationalFunction(1));
}

PbwElement PbwElement::monomial(const Algebra& alg, const PbwMonomial& m, const RationalFunction& c) {
    PbwElement r;
    r.alg_ = alg;
    if (c.is_zero()) return r;
    if (pbw_degree(m) == 0) {
        r.terms_.emplace(PbwMonomial{}, c);
    } else {
        if (static_cast<int>(m.size()) != alg->dimension()) throw ShapeMismatch("monomial length differs from dimension");
        r.terms_.emplace(m, c);
    }
    return r;
}

namespace {

struct PbwOps {
    using Value = PbwElement;
    const Algebra& alg;

    Value integer(const mpz_class& c) const { return Value(RationalFunction(c)); }
    Value identifier(const std::string& name) const {
        if (name.size() > 1 && name[0] == 'X' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            int i = std::stoi(name.substr(1)) - 1;
            return PbwElement::generator(alg, i);
        }
        return Value(RationalFunction::parameter(name));
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const {
        if (!b.is_scalar()) throw ParseError("division by a non-scalar element " + b.to_string());
        return a.scaled(RationalFunction(1) / b.scalar_part());
    }
    Value neg(const Value& a) const { return -a; }
    Value pow(const Value& a, unsigned e) const {
        Value r(1);
        for (unsigned i = 0; i < e; ++i) r = r * a;
        return r;
    }
};

} // namespace

PbwElement PbwElement::parse(const Algebra& alg, std::string_view text) {
    PbwOps ops{alg};
    PbwElement r = detail::ExpressionParser<PbwOps>(text, ops).parse();
    r.alg_ = alg;
    return r;
}

unsigned PbwElement::order() const { return terms_.empty() ? 0 : pbw_degree(terms_.rbegin()->first); }

RationalFunction PbwElement::scalar_part() const {
    auto it = terms_.begin();
    if (it == terms_.end() || pbw_degree(it->first) != 0) return {};
    return it->second;
}

const Algebra& PbwElement::join(const PbwElement& a, const PbwElement& b) {
    if (a.alg_ && b.alg_ && a.alg_ != b.alg_)
        throw AlgebraMismatch("elements belong to '" + a.alg_->name() + "' and '" + b.alg_->name() + "'");
    return a.alg_ ? a.alg_ : b.alg_;
}

PbwElement PbwElement::operator-() const {
    PbwElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
    alg_ = join(*this, o);
    for (const auto& [m, c] : o.terms_) detail::accumulate(terms_, m, c);
    return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
    alg_ = join(*this, o);
    for (const auto& [m, c] : o.terms_) detail::accumulate(terms_, m, -c);
    return *this;
}

PbwElement PbwElement::scaled(const RationalFunction& k) const {
    PbwElement r;
    r.alg_ = alg_;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

PbwElement operator*(const PbwElement& a, const PbwElement& b) {
    PbwElement r;
    r.alg_ = PbwElement::join(a, b);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [v, cb] : b.terms_) {
        if (pbw_degree(v) == 0) {
            for (const auto& [u, ca] : a.terms_) detail::accumulate(r.terms_, u, ca * cb);
            continue;
        }
        detail::Accumulator cur;
        const auto n = static_cast<std::size_t>(r.alg_->dimension());
        for (const auto& [u, ca] : a.terms_) {
            PbwMonomial full = u.empty() ? PbwMonomial(n, 0) : u;
            cur.emplace(std::move(full), ca * cb);
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            for (unsigned rep = 0; rep < v[i]; ++rep) {
                detail::Accumulator next;
                for (const auto& [m, c] : cur)
                    for (const auto& [m2, c2] : detail::right_multiply(*r.alg_, m, static_cast<int>(i)))
                        detail::accumulate(next, m2, c2.is_one() ? c : c * c2);
                cur = std::move(next);
            }
        for (const auto& [m, c] : cur) detail::accumulate(r.terms_, m, c);
    }
    return r;
}

PbwElement PbwElement::antipode() const {
    PbwElement r;
    r.alg_ = alg_;
    for (const auto& [m, c] : terms_) {
        PbwElement word(c);
        for (std::size_t i = m.size(); i-- > 0;)
            for (unsigned rep = 0; rep < m[i]; ++rep) word = word * (-generator(alg_, static_cast<int>(i)));
        r += word;
    }
    return r;
}

std::string PbwElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool scalar = pbw_degree(m) == 0;
        const bool negative = c.numerator().is_term() && c.numerator().leading_coefficient() < 0;
        const RationalFunction a = negative ? -c : c;
        std::string coeff = a.to_string();
        if (!a.is_atomic() && !(scalar && terms_.size() == 1)) coeff = "(" + coeff + ")";
        std::string term;
        if (scalar)
            term = coeff;
        else if (coeff == "1")
            term = pbw_monomial_string(m);
        else
            term = coeff + "*" + pbw_monomial_string(m);
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PbwElement& e) { return os << e.to_string(); }

} // namespace rumin
