#include "rumin/zpbw.hpp"

#include "rumin/error.hpp"

namespace rumin {

namespace {

void accumulate(ZPbwElement::Terms& acc, const PbwMonomial& m, const ZRationalFunction& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

const Algebra& join(const Algebra& a, const Algebra& b) {
    if (a && b && a != b) throw AlgebraMismatch("elements belong to '" + a->name() + "' and '" + b->name() + "'");
    return a ? a : b;
}

} // namespace

ZPbwElement::ZPbwElement(const ZRationalFunction& c) {
    if (!c.is_zero()) terms_.emplace(PbwMonomial{}, c);
}

ZPbwElement::ZPbwElement(const PbwElement& e) : alg_(e.algebra()) {
    for (const auto& [m, c] : e.terms()) terms_.emplace(m, ZRationalFunction(c));
}

ZPbwElement ZPbwElement::operator-() const {
    ZPbwElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ZPbwElement& ZPbwElement::operator+=(const ZPbwElement& o) {
    alg_ = join(alg_, o.alg_);
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

ZPbwElement& ZPbwElement::operator-=(const ZPbwElement& o) {
    alg_ = join(alg_, o.alg_);
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

ZPbwElement operator*(const ZPbwElement& a, const ZPbwElement& b) {
    ZPbwElement r;
    r.alg_ = join(a.alg_, b.alg_);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [u, f] : a.terms_)
        for (const auto& [v, g] : b.terms_) {
            ZRationalFunction fg = f * g;
            if (pbw_degree(u) == 0 || pbw_degree(v) == 0) {
                accumulate(r.terms_, pbw_degree(u) == 0 ? v : u, fg);
                continue;
            }
            PbwElement uv = PbwElement::monomial(r.alg_, u, 1) * PbwElement::monomial(r.alg_, v, 1);
            for (const auto& [m, c] : uv.terms()) accumulate(r.terms_, m, fg * ZRationalFunction(c));
        }
    return r;
}

PbwElement ZPbwElement::residue() const {
    PbwElement r;
    for (const auto& [m, c] : terms_) {
        RationalFunction res = residue_at_zero(c);
        if (!res.is_zero()) r += alg_ ? PbwElement::monomial(alg_, m, res) : PbwElement(res);
    }
    return r;
}

std::string ZPbwElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff = "(" + c.to_string() + ")";
        out += pbw_degree(m) == 0 ? coeff : coeff + "*" + pbw_monomial_string(m);
    }
    return out;
}

} // namespace rumin
