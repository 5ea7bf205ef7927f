#include "rumin/error.hpp"
#include "rumin/exterior.hpp"

#include <doctest.h>

using namespace rumin;

namespace {

std::vector<MultiIndex> subsets(int n, int k) {
    std::vector<MultiIndex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        MultiIndex I;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) I.push_back(i);
        out.push_back(I);
    }
    return out;
}

/// Sign of the permutation that sorts `v`, by counting inversions.
int sort_sign(const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

} // namespace

TEST_CASE("wedge_insert signs") {
    CHECK(wedge_insert(0, {1, 2}) == std::make_pair(1, MultiIndex{0, 1, 2}));
    CHECK(wedge_insert(1, {0, 2}) == std::make_pair(-1, MultiIndex{0, 1, 2}));
    CHECK(wedge_insert(2, {0, 1}) == std::make_pair(1, MultiIndex{0, 1, 2}));
    CHECK(wedge_insert(1, {1, 2}).first == 0);
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < n; ++k)
            for (const auto& I : subsets(n, k))
                for (int j = 0; j < n; ++j) {
                    auto [s, J] = wedge_insert(j, I);
                    if (std::find(I.begin(), I.end(), j) != I.end()) {
                        CHECK(s == 0);
                        continue;
                    }
                    std::vector<int> word{j};
                    word.insert(word.end(), I.begin(), I.end());
                    CHECK(s == sort_sign(word));
                }
}

TEST_CASE("hodge star: theta^I ^ *theta^I is the volume form and ** = (-1)^{k(n-k)}") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& I : subsets(n, k)) {
                auto [s, J] = hodge_star(n, I);
                std::vector<int> word = I;
                word.insert(word.end(), J.begin(), J.end());
                CHECK(static_cast<int>(word.size()) == n);
                CHECK(s == sort_sign(word));
                auto [s2, K] = hodge_star(n, J);
                CHECK(K == I);
                CHECK(s * s2 == ((k * (n - k)) % 2 ? -1 : 1));
            }
    CHECK(hodge_star(4, {1}) == std::make_pair(-1, MultiIndex{0, 2, 3}));
    CHECK(hodge_star(3, {0, 2}) == std::make_pair(-1, MultiIndex{1}));
}

TEST_CASE("engel frame order and weight duality") {
    auto alg = catalog("engel");
    Frame f(*alg);
    CHECK(f.size(2) == 6);
    std::vector<std::string> k2;
    for (const auto& I : f.basis(2)) k2.push_back(multi_index_string(I));
    CHECK(k2 == std::vector<std::string>{"theta^{1,2}", "theta^{1,3}", "theta^{2,3}", "theta^{1,4}", "theta^{2,4}",
                                         "theta^{3,4}"});
    std::vector<std::string> k3;
    for (const auto& I : f.basis(3)) k3.push_back(multi_index_string(I));
    CHECK(k3 == std::vector<std::string>{"theta^{1,2,3}", "theta^{1,2,4}", "theta^{1,3,4}", "theta^{2,3,4}"});
    const mpq_class total = form_weight(*alg, {0, 1, 2, 3});
    CHECK(total == 7);
    for (int k = 0; k <= 4; ++k)
        for (std::size_t p = 0; p < f.size(k); ++p) {
            const auto& I = f.basis(k)[p];
            CHECK(f.position(I) == p);
            CHECK(f.weight(k, p) == form_weight(*alg, I));
            CHECK(form_weight(*alg, hodge_star(4, I).second) == total - f.weight(k, p));
            if (p > 0) CHECK(f.weight(k, p - 1) <= f.weight(k, p));
        }
}
