#include "rumin/lie_algebra.hpp"

#include "rumin/detail/pbw_cache.hpp"
#include "rumin/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rumin {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

const RationalFunction& zero_rf() {
    static const RationalFunction z;
    return z;
}

} // namespace

LieAlgebra::LieAlgebra(std::string name, int n, std::vector<mpq_class> weights, std::vector<std::string> parameters,
                       BracketTable brackets)
    : name_(std::move(name)),
      n_(n),
      weights_(std::move(weights)),
      parameters_(std::move(parameters)),
      brackets_(std::move(brackets)),
      cache_(std::make_unique<PbwCache>()) {
    if (n_ < 0) throw InvalidAlgebra("negative dimension");
    if (static_cast<int>(weights_.size()) != n_)
        throw InvalidAlgebra("expected " + std::to_string(n_) + " weights, got " + std::to_string(weights_.size()));
    const auto un = static_cast<std::size_t>(n_);
    dense_.assign(un * un * un, RationalFunction());
    for (auto it = brackets_.begin(); it != brackets_.end();) {
        auto [i, j] = it->first;
        if (i < 0 || j >= n_ || i >= j)
            throw InvalidAlgebra("bracket indices (" + idx(i) + "," + idx(j) + ") must satisfy 1 <= i < j <= n");
        auto& terms = it->second;
        std::map<int, RationalFunction> merged;
        for (const auto& t : terms) {
            if (t.k < 0 || t.k >= n_) throw InvalidAlgebra("bracket term index " + idx(t.k) + " out of range");
            merged[t.k] += t.coeff;
        }
        terms.clear();
        for (auto& [k, c] : merged)
            if (!c.is_zero()) terms.push_back({k, c});
        if (terms.empty()) {
            it = brackets_.erase(it);
            continue;
        }
        for (const auto& t : terms) {
            dense_[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(t.k)] = t.coeff;
            dense_[(static_cast<std::size_t>(j) * un + static_cast<std::size_t>(i)) * un + static_cast<std::size_t>(t.k)] = -t.coeff;
        }
        ++it;
    }
}

LieAlgebra::~LieAlgebra() = default;

const RationalFunction& LieAlgebra::structure_constant(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_) return zero_rf();
    const auto un = static_cast<std::size_t>(n_);
    return dense_[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un + static_cast<std::size_t>(k)];
}

Algebra LieAlgebra::specialize(const std::map<std::string, mpq_class>& bindings) const {
    BracketTable table;
    for (const auto& [key, terms] : brackets_) {
        std::vector<BracketTerm> out;
        for (const auto& t : terms) out.push_back({t.k, t.coeff.substitute(bindings)});
        table.emplace(key, std::move(out));
    }
    std::vector<std::string> params;
    std::string suffix;
    for (const auto& p : parameters_) {
        auto it = bindings.find(p);
        if (it == bindings.end()) {
            params.push_back(p);
        } else {
            suffix += (suffix.empty() ? "" : ",") + p + "=" + it->second.get_str();
        }
    }
    std::string name = suffix.empty() ? name_ : name_ + "[" + suffix + "]";
    return make_algebra(name, n_, weights_, params, std::move(table));
}

Algebra make_algebra(std::string name, int n, std::vector<mpq_class> weights, std::vector<std::string> parameters,
                     LieAlgebra::BracketTable brackets) {
    return std::make_shared<const LieAlgebra>(std::move(name), n, std::move(weights), std::move(parameters),
                                              std::move(brackets));
}

ValidationReport validate(const LieAlgebra& alg) {
    ValidationReport report;
    const int n = alg.dimension();
    for (int i = 0; i < n; ++i) {
        if (alg.weight(i) <= 0) report.violations.push_back("weight of X" + idx(i) + " is not positive");
        if (i > 0 && alg.weight(i) < alg.weight(i - 1))
            report.violations.push_back("weights decrease at X" + idx(i - 1) + ", X" + idx(i));
    }
    std::set<std::string> declared(alg.parameters().begin(), alg.parameters().end());
    for (const auto& [key, terms] : alg.brackets()) {
        for (const auto& t : terms) {
            if (alg.weight(key.first) + alg.weight(key.second) != alg.weight(t.k))
                report.violations.push_back("weight compatibility fails at (i,j,k)=(" + idx(key.first) + "," +
                                            idx(key.second) + "," + idx(t.k) + ")");
            for (Symbol s : t.coeff.parameters())
                if (!declared.count(s.name()))
                    report.violations.push_back("undeclared parameter '" + s.name() + "' in [X" + idx(key.first) +
                                                ",X" + idx(key.second) + "]");
        }
    }
    // Jacobi: sum over cyclic (a,b,c) of [[Xa,Xb],Xc] = sum_m c_ab^m c_mc^p X_p.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                for (int p = 0; p < n; ++p) {
                    RationalFunction s;
                    const int cyc[3][3] = {{i, j, l}, {j, l, i}, {l, i, j}};
                    for (const auto& c : cyc)
                        for (int m = 0; m < n; ++m) {
                            const auto& a = alg.structure_constant(c[0], c[1], m);
                            if (a.is_zero()) continue;
                            const auto& b = alg.structure_constant(m, c[2], p);
                            if (!b.is_zero()) s += a * b;
                        }
                    if (!s.is_zero())
                        report.violations.push_back("Jacobi identity fails for (i,j,l)=(" + idx(i) + "," + idx(j) +
                                                    "," + idx(l) + ") in component X" + idx(p) + ": " +
                                                    s.to_string());
                }
    return report;
}

std::vector<mpq_class> weight_set(const LieAlgebra& alg, int k) {
    const int n = alg.dimension();
    if (k < 0 || k > n) throw DegreeOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
    // Subset-sum over k-element subsets: dynamic programming on (count, weight).
    std::vector<std::set<mpq_class>> sums(static_cast<std::size_t>(k) + 1);
    sums[0].insert(mpq_class(0));
    for (int i = 0; i < n; ++i)
        for (int c = std::min(k, i + 1); c >= 1; --c)
            for (const auto& w : sums[static_cast<std::size_t>(c - 1)]) sums[static_cast<std::size_t>(c)].insert(w + alg.weight(i));
    const auto& s = sums[static_cast<std::size_t>(k)];
    return {s.begin(), s.end()};
}

int compute_N0(const LieAlgebra& alg) {
    std::size_t best = 1;
    for (int k = 0; k <= alg.dimension(); ++k) best = std::max(best, weight_set(alg, k).size());
    return static_cast<int>(best);
}

std::vector<std::string> catalog_names() {
    return {"abelian2", "abelian3", "heisenberg3", "heisenberg5", "engel", "engel1"};
}

Algebra catalog(const std::string& name) {
    using T = LieAlgebra::BracketTable;
    if (name == "abelian2") return make_algebra(name, 2, {1, 1}, {}, {});
    if (name == "abelian3") return make_algebra(name, 3, {1, 1, 1}, {}, {});
    if (name == "heisenberg3") return make_algebra(name, 3, {1, 1, 2}, {}, T{{{0, 1}, {{2, 1}}}});
    if (name == "heisenberg5")
        return make_algebra(name, 5, {1, 1, 1, 1, 2}, {}, T{{{0, 1}, {{4, 1}}}, {{2, 3}, {{4, 1}}}});
    if (name == "engel" || name == "engel1") {
        RationalFunction t = name == "engel" ? RationalFunction::parameter("t") : RationalFunction(1);
        std::vector<std::string> params;
        if (name == "engel") params.push_back("t");
        return make_algebra(name, 4, {1, 1, 2, 3}, params, T{{{0, 1}, {{2, 1}}}, {{0, 2}, {{3, t}}}});
    }
    throw InvalidAlgebra("unknown catalog group '" + name + "'");
}

Algebra parse_algebra_json(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        std::string name = doc.at("name").get<std::string>();
        int n = doc.at("dimension").get<int>();
        std::vector<std::string> params;
        if (doc.contains("parameters")) params = doc.at("parameters").get<std::vector<std::string>>();
        std::vector<mpq_class> weights;
        for (const auto& w : doc.at("weights")) weights.push_back(parse_rational(w.is_string() ? w.get<std::string>() : w.dump()));
        LieAlgebra::BracketTable table;
        if (doc.contains("brackets")) {
            for (const auto& b : doc.at("brackets")) {
                int i = b.at("i").get<int>() - 1;
                int j = b.at("j").get<int>() - 1;
                if (i >= j) throw InvalidAlgebra("bracket requires i < j, got i=" + idx(i) + ", j=" + idx(j));
                if (table.count({i, j})) throw InvalidAlgebra("duplicate bracket (" + idx(i) + "," + idx(j) + ")");
                std::vector<BracketTerm> terms;
                for (const auto& t : b.at("terms")) {
                    const auto& c = t.at("coeff");
                    terms.push_back({t.at("k").get<int>() - 1,
                                     RationalFunction::parse(c.is_string() ? c.get<std::string>() : c.dump())});
                }
                table.emplace(std::make_pair(i, j), std::move(terms));
            }
        }
        return make_algebra(std::move(name), n, std::move(weights), std::move(params), std::move(table));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid group description: ") + e.what());
    }
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra_json(ss.str());
}

Algebra resolve_algebra(const std::string& group) {
    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), group) != names.end()) return catalog(group);
    return load_algebra_file(group);
}

} // namespace rumin
