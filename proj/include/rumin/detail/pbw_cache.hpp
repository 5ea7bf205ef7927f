#pragma once

#include "rumin/rational_function.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rumin {

/// Memo table for right multiplication of a PBW monomial by a generator.
struct PbwCache {
    using Exponents = std::vector<unsigned>;
    using Terms = std::vector<std::pair<Exponents, RationalFunction>>;

    struct KeyHash {
        std::size_t operator()(const std::pair<Exponents, int>& key) const {
            std::size_t h = static_cast<std::size_t>(key.second) * 0x9e3779b97f4a7c15ULL;
            for (unsigned e : key.first) h = (h ^ e) * 0x100000001b3ULL;
            return h;
        }
    };

    std::mutex mutex;
    std::unordered_map<std::pair<Exponents, int>, Terms, KeyHash> products;
};

} // namespace rumin
