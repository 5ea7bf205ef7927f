#pragma once

#include "rumin/complex.hpp"
#include "rumin/verifier.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace rumin {

using Bindings = std::map<std::string, mpq_class>;

/// One emitted operator; spectral data and Betti numbers are not graded operators.
using ReportEntry = std::variant<GradedOperator, ZGradedOperator, SpectralDecomposition, std::vector<long>>;

struct ComplexReport {
    Space space;
    Bindings bindings;
    std::vector<std::pair<std::string, ReportEntry>> operators;
    std::vector<CheckResult> checks;
};

/// Selects operators by name (empty: all) and substitutes `bindings` into the
/// final matrices. Eigenvalues that coincide after substitution are merged.
/// Throws UnknownOperator, DenominatorVanishes.
ComplexReport make_report(const RuminComplex& c, const std::vector<std::string>& ops, const Bindings& bindings = {});

/// Throws UnknownOperator on the first name not in operator_names().
void check_operator_names(const std::vector<std::string>& ops);

SpectralDecomposition specialize_spectrum(const SpectralDecomposition& s, const Bindings& bindings);

nlohmann::ordered_json to_json(const ComplexReport& r);
std::string to_latex(const ComplexReport& r);
std::string to_text(const ComplexReport& r);

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& checks);
std::string checks_to_text(const std::vector<CheckResult>& checks);

nlohmann::ordered_json operator_to_json(const GradedOperator& t);
/// Inverse of operator_to_json. Throws ParseError.
GradedOperator operator_from_json(const nlohmann::json& j, const Space& space);

/// LaTeX for a single entry, e.g. "-X_4 - \frac{1}{t} X_1^{2} X_2".
std::string latex_entry(const PbwElement& e);

} // namespace rumin
