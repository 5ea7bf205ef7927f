#include "rumin/error.hpp"
#include "rumin/pbw.hpp"

#include "word_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace rumin;

namespace {

PbwElement word(const Algebra& alg, const std::vector<int>& w) {
    PbwElement r(1);
    for (int g : w) r = r * PbwElement::generator(alg, g);
    return r;
}

PbwElement random_element(const Algebra& alg, std::mt19937& rng) {
    std::uniform_int_distribution<int> gen(0, alg->dimension() - 1), len(0, 3), coef(-2, 2), nterms(1, 3);
    PbwElement r;
    int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> w(static_cast<std::size_t>(len(rng)));
        for (auto& g : w) g = gen(rng);
        r += word(alg, w).scaled(RationalFunction(coef(rng)));
    }
    return r;
}

} // namespace

TEST_CASE("Engel normal forms") {
    auto e = catalog("engel");
    auto P = [&](const char* s) { return PbwElement::parse(e, s); };
    CHECK(P("X2*X1") == P("X1.X2 - X3"));
    CHECK(P("X2*X1^2") == P("X1^2.X2 - 2*X1.X3 + t*X4"));
    CHECK(P("(X1^2*X2 - X2*X1^2)/t") == P("(2/t)*X1.X3 - X4"));
    auto a = catalog("abelian2");
    CHECK(PbwElement::parse(a, "X2*X1") == PbwElement::parse(a, "X1.X2"));
}

TEST_CASE("multiplication matches the brute-force rewriter") {
    for (const char* name : {"engel", "heisenberg3", "heisenberg5"}) {
        auto alg = catalog(name);
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> gen(0, alg->dimension() - 1), len(0, 5);
        for (int trial = 0; trial < 80; ++trial) {
            std::vector<int> w(static_cast<std::size_t>(len(rng)));
            for (auto& g : w) g = gen(rng);
            CHECK(word(alg, w) == rumin::testing::rewrite_words(alg, {{w, RationalFunction(1)}}));
        }
    }
}

TEST_CASE("PBW algebra laws") {
    auto e = catalog("engel");
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        PbwElement a = random_element(e, rng), b = random_element(e, rng), c = random_element(e, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).order() <= a.order() + b.order());
        CHECK(a.antipode().antipode() == a);
        CHECK((a * b).antipode() == b.antipode() * a.antipode());
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            PbwElement xi = PbwElement::generator(e, i), xj = PbwElement::generator(e, j);
            PbwElement bracket;
            for (int k = 0; k < 4; ++k) bracket += PbwElement::generator(e, k).scaled(e->structure_constant(i, j, k));
            CHECK(xi * xj - xj * xi == bracket);
        }
}

TEST_CASE("antipode") {
    auto e = catalog("engel");
    auto P = [&](const char* s) { return PbwElement::parse(e, s); };
    CHECK(P("X1").antipode() == P("-X1"));
    CHECK(P("X1.X2").antipode() == P("X1.X2 - X3"));
    CHECK(P("5/t").antipode() == P("5/t"));
}

TEST_CASE("text form round-trips") {
    auto e = catalog("engel");
    auto x = PbwElement::parse(e, "(X1^2*X2 - X2*X1^2)/t");
    CHECK(x.to_string() == "-X4 + (2/t)*X1.X3");
    CHECK(PbwElement::parse(e, "-(X1.X2+X3)/t").to_string() == "-(1/t)*X3 - (1/t)*X1.X2");
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        PbwElement a = random_element(e, rng).scaled(RationalFunction::parse("(t+1)/(t^2-3)"));
        a += PbwElement(RationalFunction::parse("t/(t-1)"));
        CHECK(PbwElement::parse(e, a.to_string()) == a);
    }
    CHECK_THROWS_AS(PbwElement::parse(e, "X5"), ParseError);
    CHECK_THROWS_AS(PbwElement::parse(e, "X1/X2"), ParseError);
    CHECK_THROWS_AS(PbwElement::parse(e, "X1 +"), ParseError);
}

TEST_CASE("mixing algebras is rejected") {
    auto a = catalog("engel"), b = catalog("heisenberg3");
    CHECK_THROWS_AS(PbwElement::generator(a, 0) * PbwElement::generator(b, 0), AlgebraMismatch);
    CHECK(PbwElement(3) * PbwElement::generator(b, 0) == PbwElement::parse(b, "3*X1"));
}
