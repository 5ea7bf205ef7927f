#include "rumin/error.hpp"
#include "rumin/report.hpp"

#include <doctest.h>

using namespace rumin;

TEST_CASE("json matrices round-trip") {
    for (const auto& name : {"engel", "heisenberg5"}) {
        auto c = build_complex(catalog(name));
        auto report = make_report(c, {});
        auto j = nlohmann::json::parse(to_json(report).dump());
        for (const auto& [op, entry] : report.operators) {
            if (auto t = std::get_if<GradedOperator>(&entry)) {
                INFO(name << " " << op);
                CHECK(operator_from_json(j["operators"][op], c.space) == *t);
            }
        }
        CHECK(j["frames"]["2"].size() == c.space->frame.size(2));
    }
}

TEST_CASE("output is byte-identical across runs") {
    auto once = [] {
        auto c = build_complex(catalog("engel"));
        auto r = make_report(c, {});
        return to_json(r).dump() + to_latex(r) + to_text(r);
    };
    CHECK(once() == once());
}

TEST_CASE("unknown operators are rejected") {
    CHECK_THROWS_AS(check_operator_names({"D", "nope"}), UnknownOperator);
    CHECK_NOTHROW(check_operator_names({"D", "dc", "betti", "spectral"}));
}

TEST_CASE("late binding merges coinciding eigenvalues") {
    auto c = build_complex(catalog("engel"));
    auto r = make_report(c, {"spectral"}, {{"t", 1}});
    const auto& s = std::get<SpectralDecomposition>(r.operators.at(0).second);
    REQUIRE(s[1].size() == 2);
    CHECK(s[1][1].eigenvalue.is_one());
    ScalarMatrix merged(4, 4);
    merged(2, 2) = RationalFunction(1);
    merged(3, 3) = RationalFunction(1);
    CHECK(s[1][1].projector == merged);
}

TEST_CASE("late binding at a pole reports the vanishing denominator") {
    auto c = build_complex(catalog("engel"));
    CHECK_THROWS_AS(make_report(c, {"P"}, {{"t", 0}}), DenominatorVanishes);
    CHECK_NOTHROW(make_report(c, {"d"}, {{"t", 0}}));
}

TEST_CASE("latex entries") {
    auto alg = catalog("engel");
    CHECK(latex_entry(PbwElement::parse(alg, "-X4-(X1^2*X2+X1*X3)/t")) ==
          "-X_{4} - \\frac{1}{t} X_{1}X_{3} - \\frac{1}{t} X_{1}^{2}X_{2}");
    CHECK(latex_entry(PbwElement::parse(alg, "t^2")) == "t^{2}");
    CHECK(latex_entry(PbwElement::parse(alg, "0")) == "0");
    auto c = build_complex(alg);
    auto tex = to_latex(make_report(c, {"D"}));
    CHECK(tex.find("\\mathrm{Mat}\\left(D^{(1)}\\right)") != std::string::npos);
    CHECK(tex.find("\\begin{pmatrix}") != std::string::npos);
}
