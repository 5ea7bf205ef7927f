#include "rumin/exterior.hpp"

#include "rumin/error.hpp"

#include <algorithm>

namespace rumin {

std::pair<int, MultiIndex> wedge_insert(int j, const MultiIndex& I) {
    auto it = std::lower_bound(I.begin(), I.end(), j);
    if (it != I.end() && *it == j) return {0, {}};
    auto before = it - I.begin();
    MultiIndex out(I.begin(), it);
    out.push_back(j);
    out.insert(out.end(), it, I.end());
    return {before % 2 == 0 ? 1 : -1, out};
}

std::pair<int, MultiIndex> hodge_star(int n, const MultiIndex& I) {
    MultiIndex complement;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) complement.push_back(i);
    // Inversions of the permutation (I, complement).
    long inversions = 0;
    for (int i : I)
        for (int c : complement)
            if (c < i) ++inversions;
    return {inversions % 2 == 0 ? 1 : -1, complement};
}

mpq_class form_weight(const LieAlgebra& alg, const MultiIndex& I) {
    mpq_class w = 0;
    for (int i : I) w += alg.weight(i);
    return w;
}

std::string multi_index_string(const MultiIndex& I) {
    std::string out = "theta^{";
    for (std::size_t p = 0; p < I.size(); ++p) {
        if (p) out += ",";
        out += std::to_string(I[p] + 1);
    }
    return out + "}";
}

Frame::Frame(const LieAlgebra& alg) : n_(alg.dimension()) {
    bases_.resize(static_cast<std::size_t>(n_) + 1);
    weights_.resize(static_cast<std::size_t>(n_) + 1);
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        MultiIndex I;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) I.push_back(i);
        bases_[I.size()].push_back(I);
    }
    for (int k = 0; k <= n_; ++k) {
        auto& b = bases_[static_cast<std::size_t>(k)];
        std::stable_sort(b.begin(), b.end(), [&](const MultiIndex& x, const MultiIndex& y) {
            mpq_class wx = form_weight(alg, x), wy = form_weight(alg, y);
            if (wx != wy) return wx < wy;
            return x < y;
        });
        for (std::size_t p = 0; p < b.size(); ++p) {
            positions_[b[p]] = p;
            weights_[static_cast<std::size_t>(k)].push_back(form_weight(alg, b[p]));
        }
    }
}

const std::vector<MultiIndex>& Frame::basis(int k) const {
    if (k < 0 || k > n_) throw DegreeOutOfRange("degree " + std::to_string(k) + " outside 0.." + std::to_string(n_));
    return bases_[static_cast<std::size_t>(k)];
}

std::size_t Frame::position(const MultiIndex& I) const { return positions_.at(I); }

const mpq_class& Frame::weight(int k, std::size_t pos) const {
    return weights_.at(static_cast<std::size_t>(k)).at(pos);
}

} // namespace rumin
