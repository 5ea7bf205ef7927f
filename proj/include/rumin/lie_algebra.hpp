#pragma once

#include "rumin/rational_function.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace rumin {

struct PbwCache;

/// One term c * X_k of a bracket [X_i, X_j]; indices are 0-based.
struct BracketTerm {
    int k;
    RationalFunction coeff;
};

/// Graded nilpotent Lie algebra with basis X_1..X_n (stored 0-based) and
/// dilation weights. Construction does not validate; see validate().
class LieAlgebra {
public:
    /// Keys (i, j) with i < j.
    using BracketTable = std::map<std::pair<int, int>, std::vector<BracketTerm>>;

    LieAlgebra(std::string name, int n, std::vector<mpq_class> weights, std::vector<std::string> parameters,
               BracketTable brackets);
    ~LieAlgebra();
    LieAlgebra(const LieAlgebra&) = delete;
    LieAlgebra& operator=(const LieAlgebra&) = delete;

    const std::string& name() const { return name_; }
    int dimension() const { return n_; }
    const std::vector<mpq_class>& weights() const { return weights_; }
    const mpq_class& weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& parameters() const { return parameters_; }
    const BracketTable& brackets() const { return brackets_; }

    /// c_{ij}^k for any i, j (antisymmetric).
    const RationalFunction& structure_constant(int i, int j, int k) const;

    /// Structure constants with the parameters in `bindings` substituted.
    std::shared_ptr<const LieAlgebra> specialize(const std::map<std::string, mpq_class>& bindings) const;

    PbwCache& pbw_cache() const { return *cache_; }

private:
    std::string name_;
    int n_;
    std::vector<mpq_class> weights_;
    std::vector<std::string> parameters_;
    BracketTable brackets_;
    std::vector<RationalFunction> dense_;
    std::unique_ptr<PbwCache> cache_;
};

using Algebra = std::shared_ptr<const LieAlgebra>;

Algebra make_algebra(std::string name, int n, std::vector<mpq_class> weights, std::vector<std::string> parameters,
                     LieAlgebra::BracketTable brackets);

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebra& alg);

/// Sorted set of weights [I] over multi-indices with |I| = k.
std::vector<mpq_class> weight_set(const LieAlgebra& alg, int k);

/// max_k |W^k|.
int compute_N0(const LieAlgebra& alg);

/// Built-in groups: abelian2, abelian3, heisenberg3, heisenberg5, engel, engel1.
std::vector<std::string> catalog_names();
Algebra catalog(const std::string& name);

/// Parses the JSON group format. Throws ParseError or InvalidAlgebra.
Algebra parse_algebra_json(const std::string& text);
Algebra load_algebra_file(const std::string& path);

/// Catalog name or path to a JSON file.
Algebra resolve_algebra(const std::string& group);

} // namespace rumin
