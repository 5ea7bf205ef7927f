#pragma once

#include "rumin/lie_algebra.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rumin {

/// Strictly increasing 0-based indices of theta^I.
using MultiIndex = std::vector<int>;

/// theta^j ^ theta^I = sign * theta^{I + j}; sign 0 when j is in I.
std::pair<int, MultiIndex> wedge_insert(int j, const MultiIndex& I);

/// *theta^I = sign * theta^{complement}.
std::pair<int, MultiIndex> hodge_star(int n, const MultiIndex& I);

mpq_class form_weight(const LieAlgebra& alg, const MultiIndex& I);

/// "theta^{1,3}" (1-based); the empty index prints as "theta^{}".
std::string multi_index_string(const MultiIndex& I);

/// Ordered bases of all degrees, sorted by weight then lexicographically.
class Frame {
public:
    explicit Frame(const LieAlgebra& alg);

    int dimension() const { return n_; }
    const std::vector<MultiIndex>& basis(int k) const;
    std::size_t size(int k) const { return basis(k).size(); }
    std::size_t position(const MultiIndex& I) const;
    const mpq_class& weight(int k, std::size_t pos) const;

private:
    int n_;
    std::vector<std::vector<MultiIndex>> bases_;
    std::vector<std::vector<mpq_class>> weights_;
    std::map<MultiIndex, std::size_t> positions_;
};

} // namespace rumin
