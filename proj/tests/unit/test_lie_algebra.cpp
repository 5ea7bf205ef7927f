#include "rumin/error.hpp"
#include "rumin/lie_algebra.hpp"

#include <doctest.h>

using namespace rumin;

TEST_CASE("catalog groups validate") {
    for (const auto& name : catalog_names()) {
        auto alg = catalog(name);
        CHECK_MESSAGE(validate(*alg).valid(), name);
    }
    auto engel = catalog("engel");
    CHECK(engel->dimension() == 4);
    CHECK(engel->structure_constant(0, 2, 3) == RationalFunction::parameter("t"));
    CHECK(engel->structure_constant(2, 0, 3) == -RationalFunction::parameter("t"));
    CHECK(engel->structure_constant(0, 1, 2) == RationalFunction(1));
}

TEST_CASE("weight incompatibility is reported with indices") {
    using T = LieAlgebra::BracketTable;
    auto bad = make_algebra("bad", 4, {1, 1, 2, 2}, {"t"},
                            T{{{0, 1}, {{2, 1}}}, {{0, 2}, {{3, RationalFunction::parameter("t")}}}});
    auto report = validate(*bad);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("(1,3,4)") != std::string::npos);
}

TEST_CASE("Jacobi violations are reported") {
    // [X1,X2]=X1, [X2,X3]=X2, [X1,X3]=X3
    using T = LieAlgebra::BracketTable;
    auto bad = make_algebra("nonjacobi", 3, {1, 1, 1}, {}, T{{{0, 1}, {{0, 1}}}, {{1, 2}, {{1, 1}}}, {{0, 2}, {{2, 1}}}});
    auto report = validate(*bad);
    bool jacobi = false;
    for (const auto& v : report.violations) jacobi |= v.find("Jacobi") != std::string::npos;
    CHECK(jacobi);
}

TEST_CASE("weights must be positive and non-decreasing") {
    auto bad = make_algebra("w", 2, {2, 1}, {}, {});
    CHECK_FALSE(validate(*bad).valid());
    auto neg = make_algebra("w", 2, {0, 1}, {}, {});
    CHECK_FALSE(validate(*neg).valid());
}

TEST_CASE("weight sets") {
    auto engel = catalog("engel");
    CHECK(weight_set(*engel, 2) == std::vector<mpq_class>{2, 3, 4, 5});
    CHECK(weight_set(*engel, 4) == std::vector<mpq_class>{7});
    CHECK(weight_set(*engel, 0) == std::vector<mpq_class>{0});
    CHECK(weight_set(*catalog("abelian3"), 2) == std::vector<mpq_class>{2});
    CHECK_THROWS_AS(weight_set(*engel, 5), DegreeOutOfRange);
    CHECK_THROWS_AS(weight_set(*engel, -1), DegreeOutOfRange);
}

TEST_CASE("weight-set complement duality") {
    for (const auto& name : catalog_names()) {
        auto alg = catalog(name);
        const int n = alg->dimension();
        mpq_class total = 0;
        for (const auto& w : alg->weights()) total += w;
        for (int k = 0; k <= n; ++k) {
            auto a = weight_set(*alg, k);
            auto b = weight_set(*alg, n - k);
            std::vector<mpq_class> dual;
            for (auto it = b.rbegin(); it != b.rend(); ++it) dual.push_back(total - *it);
            CHECK(a == dual);
        }
    }
}

TEST_CASE("N0") {
    CHECK(compute_N0(*catalog("engel")) == 4);
    CHECK(compute_N0(*catalog("abelian2")) == 1);
    CHECK(compute_N0(*catalog("abelian3")) == 1);
    CHECK(compute_N0(*catalog("heisenberg3")) == 2);
}

TEST_CASE("iterated brackets vanish beyond the weight depth") {
    for (const auto& name : catalog_names()) {
        auto alg = catalog(name);
        const int n = alg->dimension();
        // Depth-d brackets [X_{i1},[X_{i2},[...,X_{id+1}]]] as coefficient vectors.
        std::vector<std::vector<RationalFunction>> layer;
        for (int i = 0; i < n; ++i) {
            std::vector<RationalFunction> v(static_cast<std::size_t>(n));
            v[static_cast<std::size_t>(i)] = 1;
            layer.push_back(v);
        }
        mpq_class ratio = alg->weights().back() / alg->weights().front();
        int depth = static_cast<int>(mpz_class(ratio.get_num() / ratio.get_den()).get_si()) + 1;
        for (int d = 0; d < depth; ++d) {
            std::vector<std::vector<RationalFunction>> next;
            for (int i = 0; i < n; ++i)
                for (const auto& v : layer) {
                    std::vector<RationalFunction> w(static_cast<std::size_t>(n));
                    for (int m = 0; m < n; ++m)
                        for (int k = 0; k < n; ++k)
                            w[static_cast<std::size_t>(k)] += alg->structure_constant(i, m, k) * v[static_cast<std::size_t>(m)];
                    next.push_back(w);
                }
            layer = std::move(next);
        }
        for (const auto& v : layer)
            for (const auto& c : v) CHECK(c.is_zero());
    }
}

TEST_CASE("JSON loader") {
    const char* ok = R"({"name":"h","dimension":3,"parameters":["s"],"weights":["1","1","2"],
                         "brackets":[{"i":1,"j":2,"terms":[{"k":3,"coeff":"s^2"}]}]})";
    auto h = parse_algebra_json(ok);
    CHECK(h->structure_constant(0, 1, 2) == RationalFunction::parse("s^2"));
    CHECK(validate(*h).valid());
    CHECK_THROWS_AS(parse_algebra_json("{not json"), ParseError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x"})"), ParseError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","dimension":2,"weights":["1","1"],
                                            "brackets":[{"i":2,"j":1,"terms":[]}]})"),
                    InvalidAlgebra);
}

TEST_CASE("specialization of structure constants") {
    auto e1 = catalog("engel")->specialize({{"t", 1}});
    CHECK(e1->parameters().empty());
    CHECK(e1->structure_constant(0, 2, 3) == RationalFunction(1));
}
