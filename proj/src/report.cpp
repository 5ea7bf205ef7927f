#include "rumin/report.hpp"

#include "rumin/error.hpp"

#include <algorithm>
#include <sstream>

namespace rumin {

namespace {

using ojson = nlohmann::ordered_json;

RationalFunction substitute_or_throw(const RationalFunction& c, const Bindings& b) {
    return b.empty() ? c : c.substitute(b);
}

ZRationalFunction specialize_z(const ZRationalFunction& f, const Bindings& b) {
    auto sub = [&](const ZPolynomial& p) {
        std::vector<RationalFunction> coeffs;
        for (const auto& c : p.coefficients()) coeffs.push_back(substitute_or_throw(c, b));
        return ZPolynomial(std::move(coeffs));
    };
    ZPolynomial den = sub(f.denominator());
    if (den.is_zero()) throw DenominatorVanishes("z-denominator vanishes under the binding");
    return ZRationalFunction(sub(f.numerator()), den);
}

ZGradedOperator specialize_z_operator(const ZGradedOperator& t, const Space& target, const Bindings& b) {
    ZGradedOperator r(target, t.shift());
    for (int k = t.min_degree(); k <= t.max_degree(); ++k)
        r.block(k) = t.block(k).map([&](const ZPbwElement& e) {
            ZPbwElement out;
            for (const auto& [m, c] : e.terms())
                out += ZPbwElement(PbwElement::monomial(target->algebra, m, RationalFunction(1))) *
                       ZPbwElement(specialize_z(c, b));
            return out;
        });
    return r;
}

std::string latex_name(const std::string& op) {
    static const std::map<std::string, std::string> names = {
        {"d0", "d_0"},        {"d0inv", "d_0^{-1}"}, {"box0", "\\Box_0"}, {"pi0", "\\Pi_0"},
        {"box", "\\Box"},     {"resolvent", "(z-\\Box)^{-1}"},          {"Linv", "L^{-1}"},
        {"L1", "L_1"},        {"LdL", "L^{-1}dL"},   {"Pi", "\\Pi"},     {"dc", "d_c"},
        {"g", "\\hat g"}};
    auto it = names.find(op);
    return it == names.end() ? op : it->second;
}

/// "2*t^2*s" -> "2 t^{2} s"
std::string latex_polynomial(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '*') {
            out += ' ';
        } else if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out += "^{" + s.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string latex_monomial(const PbwMonomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        out += "X_{" + std::to_string(i + 1) + "}";
        if (m[i] > 1) out += "^{" + std::to_string(m[i]) + "}";
    }
    return out;
}

template <typename Entry, typename F>
ojson blocks_json(const BasicGradedOperator<Entry>& t, F&& str) {
    ojson blocks = ojson::object();
    for (int k = t.min_degree(); k <= t.max_degree(); ++k) {
        const auto& b = t.block(k);
        ojson rows = ojson::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            ojson row = ojson::array();
            for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(str(b(i, j)));
            rows.push_back(std::move(row));
        }
        blocks[std::to_string(k)] = std::move(rows);
    }
    return blocks;
}

std::string pmatrix(const std::vector<std::vector<std::string>>& rows) {
    std::string out = "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += "  ";
        for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? " & " : "") + rows[i][j];
        out += i + 1 < rows.size() ? " \\\\\n" : "\n";
    }
    return out + "\\end{pmatrix}";
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (width.size() <= j) width.push_back(0);
            width[j] = std::max(width[j], r[j].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line = "  [";
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) line += "  ";
            line += r[j] + std::string(width[j] - r[j].size(), ' ');
        }
        out += line + "]\n";
    }
    return out;
}

template <typename M, typename F>
std::vector<std::vector<std::string>> cells(const M& m, F&& str) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(str(m(i, j)));
    return out;
}

std::string latex_rf(const RationalFunction& c) {
    if (c.denominator() == Polynomial(1)) return latex_polynomial(c.numerator().to_string());
    return "\\frac{" + latex_polynomial(c.numerator().to_string()) + "}{" +
           latex_polynomial(c.denominator().to_string()) + "}";
}

std::string latex_z(const ZPbwElement& e) {
    return "\\text{" + e.to_string() + "}";
}

} // namespace

void check_operator_names(const std::vector<std::string>& ops) {
    const auto& known = operator_names();
    for (const auto& op : ops)
        if (std::find(known.begin(), known.end(), op) == known.end()) {
            std::string list;
            for (const auto& n : known) list += (list.empty() ? "" : ", ") + n;
            throw UnknownOperator("unknown operator '" + op + "' (known: " + list + ")");
        }
}

SpectralDecomposition specialize_spectrum(const SpectralDecomposition& s, const Bindings& bindings) {
    SpectralDecomposition out;
    for (const auto& spaces : s) {
        std::vector<Eigenspace> merged;
        for (const auto& e : spaces) {
            RationalFunction lambda = substitute_or_throw(e.eigenvalue, bindings);
            ScalarMatrix proj = e.projector.map([&](const RationalFunction& x) { return substitute_or_throw(x, bindings); });
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Eigenspace& m) { return m.eigenvalue == lambda; });
            if (it == merged.end())
                merged.push_back({lambda, proj});
            else
                it->projector = it->projector + proj;
        }
        std::sort(merged.begin(), merged.end(),
                  [](const Eigenspace& a, const Eigenspace& b) { return eigenvalue_less(a.eigenvalue, b.eigenvalue); });
        out.push_back(std::move(merged));
    }
    return out;
}

ComplexReport make_report(const RuminComplex& c, const std::vector<std::string>& ops, const Bindings& bindings) {
    check_operator_names(ops);
    ComplexReport r;
    r.bindings = bindings;
    r.space = bindings.empty() ? c.space : make_space(c.space->algebra->specialize(bindings));
    auto spec = [&](const GradedOperator& t) { return bindings.empty() ? t : specialize(t, r.space, bindings); };

    const std::vector<std::string>& wanted = ops.empty() ? operator_names() : ops;
    for (const auto& name : operator_names()) {
        if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        ReportEntry entry;
        if (name == "d") entry = spec(c.d);
        else if (name == "d0") entry = spec(c.d0);
        else if (name == "d0inv") entry = spec(c.d0_inv);
        else if (name == "box0") entry = spec(c.box0);
        else if (name == "pi0") entry = spec(c.pi0);
        else if (name == "spectral") {
            if (!c.spectrum)
                throw EigenvaluesNotInField(c.spectrum_error + "; use --resolvent direct and omit 'spectral'");
            entry = specialize_spectrum(*c.spectrum, bindings);
        } else if (name == "box") entry = spec(c.box);
        else if (name == "B") entry = spec(c.B);
        else if (name == "resolvent") {
            const ZGradedOperator& res = c.resolvent_spectral ? *c.resolvent_spectral : c.resolvent_direct;
            entry = bindings.empty() ? res : specialize_z_operator(res, r.space, bindings);
        } else if (name == "P") entry = spec(c.P);
        else if (name == "L") entry = spec(c.l.L);
        else if (name == "Linv") entry = spec(c.l.L_inv);
        else if (name == "L1") entry = spec(c.l.L1);
        else if (name == "LdL") entry = spec(c.dc_split.LdL);
        else if (name == "D") entry = spec(c.dc_split.D);
        else if (name == "C") entry = spec(c.dc_split.C);
        else if (name == "b") entry = spec(c.rumin.b);
        else if (name == "Pi") entry = spec(c.rumin.Pi);
        else if (name == "dc") entry = spec(c.rumin.dc);
        else if (name == "g") entry = spec(c.gh.g_hat);
        else if (name == "h") entry = spec(c.gh.h);
        else if (name == "betti") entry = c.betti;
        r.operators.emplace_back(name, std::move(entry));
    }
    return r;
}

ojson operator_to_json(const GradedOperator& t) {
    return ojson{{"shift", t.shift()},
                 {"blocks", blocks_json(t, [](const PbwElement& e) { return e.to_string(); })}};
}

GradedOperator operator_from_json(const nlohmann::json& j, const Space& space) {
    try {
        GradedOperator t(space, j.at("shift").get<int>());
        for (const auto& [key, rows] : j.at("blocks").items()) {
            auto& b = t.block(std::stoi(key));
            if (rows.size() != b.rows()) throw ParseError("block " + key + " has the wrong number of rows");
            for (std::size_t i = 0; i < b.rows(); ++i) {
                if (rows[i].size() != b.cols()) throw ParseError("block " + key + " has the wrong number of columns");
                for (std::size_t c = 0; c < b.cols(); ++c)
                    b(i, c) = PbwElement::parse(space->algebra, rows[i][c].get<std::string>());
            }
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed operator JSON: ") + e.what());
    }
}

ojson checks_to_json(const std::vector<CheckResult>& checks) {
    ojson out = ojson::array();
    for (const auto& c : checks) {
        ojson j{{"name", c.name}, {"degree", c.degree_label()}, {"passed", c.passed}};
        if (c.witness) {
            ojson w = ojson::object();
            if (c.witness->located) {
                w["row"] = c.witness->row + 1;
                w["col"] = c.witness->col + 1;
            }
            w["difference"] = c.witness->difference;
            j["witness"] = std::move(w);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size(), ' ') << "  k="
           << c.degree_label();
        if (c.witness && c.witness->located)
            os << "  at (" << c.witness->row + 1 << "," << c.witness->col + 1 << "): " << c.witness->difference;
        else if (c.witness)
            os << "  " << c.witness->difference;
        os << "\n";
        if (!c.passed) ++failed;
    }
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

nlohmann::ordered_json to_json(const ComplexReport& r) {
    const auto& alg = *r.space->algebra;
    const int n = r.space->dimension();
    ojson params = ojson::object();
    for (const auto& p : alg.parameters()) params[p] = nullptr;
    for (const auto& [p, v] : r.bindings) params[p] = v.get_str();
    ojson frames = ojson::object();
    for (int k = 0; k <= n; ++k) {
        ojson basis = ojson::array();
        for (const auto& I : r.space->frame.basis(k)) basis.push_back(multi_index_string(I));
        frames[std::to_string(k)] = std::move(basis);
    }
    ojson ops = ojson::object();
    for (const auto& [name, entry] : r.operators) {
        if (auto t = std::get_if<GradedOperator>(&entry)) {
            ops[name] = operator_to_json(*t);
        } else if (auto z = std::get_if<ZGradedOperator>(&entry)) {
            ops[name] = ojson{{"shift", z->shift()},
                              {"blocks", blocks_json(*z, [](const ZPbwElement& e) { return e.to_string(); })}};
        } else if (auto s = std::get_if<SpectralDecomposition>(&entry)) {
            ojson blocks = ojson::object();
            for (std::size_t k = 0; k < s->size(); ++k) {
                ojson spaces = ojson::array();
                for (const auto& e : (*s)[k]) {
                    ojson rows = ojson::array();
                    for (const auto& row : cells(e.projector, [](const RationalFunction& x) { return x.to_string(); }))
                        rows.push_back(row);
                    spaces.push_back(ojson{{"eigenvalue", e.eigenvalue.to_string()}, {"projector", rows}});
                }
                blocks[std::to_string(k)] = std::move(spaces);
            }
            ops[name] = ojson{{"blocks", blocks}};
        } else {
            ops[name] = std::get<std::vector<long>>(entry);
        }
    }
    return ojson{{"group", alg.name()},
                 {"parameters", params},
                 {"frames", frames},
                 {"operators", ops},
                 {"checks", checks_to_json(r.checks)}};
}

std::string latex_entry(const PbwElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        const bool scalar = pbw_degree(m) == 0;
        const bool negative = c.numerator().is_term() && c.numerator().leading_coefficient() < 0;
        const RationalFunction a = negative ? -c : c;
        std::string coeff = latex_rf(a);
        if (!a.is_atomic() && a.denominator() == Polynomial(1) && !scalar) coeff = "(" + coeff + ")";
        std::string term = scalar ? coeff : (a.is_one() ? "" : coeff + " ") + latex_monomial(m);
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += negative ? " - " + term : " + " + term;
    }
    return out;
}

std::string to_latex(const ComplexReport& r) {
    std::ostringstream os;
    for (const auto& [name, entry] : r.operators) {
        const std::string sym = latex_name(name);
        if (auto t = std::get_if<GradedOperator>(&entry)) {
            for (int k = t->min_degree(); k <= t->max_degree(); ++k)
                os << "\\mathrm{Mat}\\left(" << sym << "^{(" << k << ")}\\right) = "
                   << pmatrix(cells(t->block(k), [](const PbwElement& e) { return latex_entry(e); })) << "\n\n";
        } else if (auto z = std::get_if<ZGradedOperator>(&entry)) {
            for (int k = z->min_degree(); k <= z->max_degree(); ++k)
                os << "\\mathrm{Mat}\\left(" << sym << "^{(" << k << ")}\\right) = "
                   << pmatrix(cells(z->block(k), [](const ZPbwElement& e) { return latex_z(e); })) << "\n\n";
        } else if (auto s = std::get_if<SpectralDecomposition>(&entry)) {
            for (std::size_t k = 0; k < s->size(); ++k)
                for (const auto& e : (*s)[k])
                    os << "\\Pi_{" << latex_rf(e.eigenvalue) << "}^{(" << k << ")} = "
                       << pmatrix(cells(e.projector, [](const RationalFunction& x) { return latex_rf(x); })) << "\n\n";
        } else {
            const auto& b = std::get<std::vector<long>>(entry);
            os << "b_\\bullet = (";
            for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
            os << ")\n\n";
        }
    }
    return os.str();
}

std::string to_text(const ComplexReport& r) {
    std::ostringstream os;
    os << "group " << r.space->algebra->name() << "\n";
    for (const auto& [p, v] : r.bindings) os << "bound " << p << " = " << v.get_str() << "\n";
    for (const auto& [name, entry] : r.operators) {
        os << "\n" << name;
        if (auto t = std::get_if<GradedOperator>(&entry)) {
            os << " (shift " << t->shift() << ")\n";
            for (int k = t->min_degree(); k <= t->max_degree(); ++k)
                os << " degree " << k << ":\n"
                   << text_table(cells(t->block(k), [](const PbwElement& e) { return e.to_string(); }));
        } else if (auto z = std::get_if<ZGradedOperator>(&entry)) {
            os << " (shift " << z->shift() << ")\n";
            for (int k = z->min_degree(); k <= z->max_degree(); ++k)
                os << " degree " << k << ":\n"
                   << text_table(cells(z->block(k), [](const ZPbwElement& e) { return e.to_string(); }));
        } else if (auto s = std::get_if<SpectralDecomposition>(&entry)) {
            os << "\n";
            for (std::size_t k = 0; k < s->size(); ++k)
                for (const auto& e : (*s)[k])
                    os << " degree " << k << ", eigenvalue " << e.eigenvalue.to_string() << ":\n"
                       << text_table(cells(e.projector, [](const RationalFunction& x) { return x.to_string(); }));
        } else {
            const auto& b = std::get<std::vector<long>>(entry);
            os << ":";
            for (long v : b) os << " " << v;
            os << "\n";
        }
    }
    if (!r.checks.empty()) os << "\n" << checks_to_text(r.checks);
    return os.str();
}

} // namespace rumin
