#pragma once

#include "rumin/pbw.hpp"

#include <map>
#include <vector>

namespace rumin::testing {

// Independent oracle: rewrite words of generator indices by swapping the
// first adjacent descent until every word is sorted.
inline PbwElement rewrite_words(const Algebra& alg, const std::map<std::vector<int>, RationalFunction>& input) {
    std::map<std::vector<int>, RationalFunction> work = input;
    PbwElement out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const std::vector<int>& w = node.key();
        const RationalFunction& c = node.mapped();
        if (c.is_zero()) continue;
        std::size_t p = 0;
        while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
        if (p + 1 >= w.size()) {
            PbwMonomial m(static_cast<std::size_t>(alg->dimension()), 0);
            for (int g : w) m[static_cast<std::size_t>(g)] += 1;
            out += PbwElement::monomial(alg, m, c);
            continue;
        }
        std::vector<int> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        work[swapped] += c;
        // X_a X_b = X_b X_a + [X_a, X_b]
        for (int l = 0; l < alg->dimension(); ++l) {
            const auto& s = alg->structure_constant(w[p], w[p + 1], l);
            if (s.is_zero()) continue;
            std::vector<int> shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            shorter.push_back(l);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
            work[shorter] += c * s;
        }
    }
    out = out + PbwElement::parse(alg, "0");
    return out;
}

} // namespace rumin::testing
