#pragma once

#include "rumin/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rumin {

struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::string difference;
    bool located = true;  // false: row and col are meaningless
};

struct CheckResult {
    std::string name;
    std::optional<int> degree;  // empty: the check is global ("all")
    bool passed = true;
    std::optional<Witness> witness;

    std::string degree_label() const { return degree ? std::to_string(*degree) : "all"; }
};

enum class SuiteLevel { fast, full };

/// Runs every identity of the construction; failures are recorded, never thrown.
std::vector<CheckResult> run_suite(const RuminComplex& c, SuiteLevel level);

/// Builds the complex without internal checks, then runs the suite.
std::vector<CheckResult> run_suite(const Algebra& alg, SuiteLevel level, const PipelineOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace rumin
