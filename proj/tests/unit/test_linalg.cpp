#include "rumin/error.hpp"
#include "rumin/scalar_linalg.hpp"
#include "rumin/spectral.hpp"

#include <doctest.h>

using namespace rumin;

namespace {

RationalFunction rf(const std::string& s) { return RationalFunction::parse(s); }

ScalarMatrix mat(std::vector<std::vector<std::string>> rows) {
    ScalarMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rf(rows[i][j]);
    return m;
}

/// Cofactor expansion along the first row.
RationalFunction det(const ScalarMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return RationalFunction(1);
    RationalFunction sum;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        ScalarMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        RationalFunction term = m(0, c) * det(minor);
        sum += c % 2 ? -term : term;
    }
    return sum;
}

} // namespace

TEST_CASE("pseudoinverse satisfies the Penrose identities") {
    std::vector<ScalarMatrix> cases = {
        mat({{"1", "2"}, {"2", "4"}}),
        mat({{"0", "0", "-1", "0"}, {"0", "0", "0", "-t"}, {"0", "0", "0", "0"}}),
        mat({{"t", "1", "0"}, {"0", "s", "t"}}),
        mat({{"1/2", "t^2"}, {"3", "0"}, {"0", "1"}}),
        ScalarMatrix(2, 3),
    };
    for (const auto& a : cases) {
        ScalarMatrix p = pseudoinverse(a);
        CHECK(a * p * a == a);
        CHECK(p * a * p == p);
        CHECK((a * p).transpose() == a * p);
        CHECK((p * a).transpose() == p * a);
    }
    CHECK(pseudoinverse(mat({{"0", "-t"}, {"0", "0"}})) == mat({{"0", "0"}, {"-1/t", "0"}}));
}

TEST_CASE("rank, inverse and kernel projector") {
    CHECK(rank(mat({{"1", "t"}, {"t", "t^2"}})) == 1);
    CHECK(rank(mat({{"1", "t"}, {"t", "1"}})) == 2);
    auto m = mat({{"1", "t"}, {"0", "2"}});
    CHECK(m * inverse(m) == ScalarMatrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{"1", "1"}, {"1", "1"}})), InternalCheckFailed);
    auto s = mat({{"1", "1", "0"}, {"1", "1", "0"}, {"0", "0", "t"}});
    auto k = kernel_projector(s);
    CHECK(k * k == k);
    CHECK((s * k).is_zero());
    CHECK(trace(k) == RationalFunction(1));
    CHECK_THROWS_AS(kernel_projector(mat({{"1", "1"}, {"0", "1"}})), NotSymmetric);
}

TEST_CASE("characteristic polynomial agrees with cofactor determinant") {
    std::vector<ScalarMatrix> cases = {
        mat({{"1", "t"}, {"t", "1"}}),
        mat({{"0", "1", "2"}, {"3", "t", "0"}, {"1", "1", "1/2"}}),
        mat({{"t^2", "0", "0", "1"}, {"0", "1", "s", "0"}, {"0", "s", "0", "0"}, {"1", "0", "0", "0"}}),
    };
    for (const auto& m : cases) {
        ZPolynomial p = characteristic_polynomial(m);
        CHECK(p.degree() == static_cast<int>(m.rows()));
        for (long x : {-2L, 0L, 1L, 5L}) {
            ScalarMatrix xm = -m;
            for (std::size_t i = 0; i < m.rows(); ++i) xm(i, i) += RationalFunction(x);
            CHECK(p.evaluate(RationalFunction(x)) == det(xm));
        }
    }
}

TEST_CASE("spectral decomposition over the rationals") {
    auto sp = spectral_decompose(mat({{"3", "0", "0"}, {"0", "3", "0"}, {"0", "0", "7"}}));
    REQUIRE(sp.size() == 2);
    CHECK(sp[0].eigenvalue == RationalFunction(3));
    CHECK(sp[0].projector == mat({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "0"}}));
    CHECK(sp[1].eigenvalue == RationalFunction(7));
    CHECK(sp[1].projector == mat({{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}));
    CHECK_THROWS_AS(spectral_decompose(mat({{"0", "1"}, {"1", "1"}})), EigenvaluesNotInField);
}

TEST_CASE("spectral decomposition with a parameter") {
    auto m = mat({{"1", "t"}, {"t", "1"}});
    auto sp = spectral_decompose(m);
    REQUIRE(sp.size() == 2);
    ScalarMatrix sum(2, 2), weighted(2, 2);
    for (const auto& e : sp) {
        sum = sum + e.projector;
        weighted = weighted + e.projector.map([&](const RationalFunction& x) { return x * e.eigenvalue; });
        CHECK(e.projector * e.projector == e.projector);
    }
    CHECK(sum == ScalarMatrix::identity(2));
    CHECK(weighted == m);
    const bool plus_first = sp[0].eigenvalue == rf("1 + t");
    CHECK(sp[plus_first ? 0 : 1].eigenvalue == rf("1 + t"));
    CHECK(sp[plus_first ? 1 : 0].eigenvalue == rf("1 - t"));

    auto engel1 = spectral_decompose(mat({{"t^2", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}));
    REQUIRE(engel1.size() == 3);
    CHECK(engel1[0].eigenvalue.is_zero());
    CHECK(engel1[1].eigenvalue.is_one());
    CHECK(engel1[2].eigenvalue == rf("t^2"));
}

TEST_CASE("squarefree part and field roots") {
    ZPolynomial z = ZPolynomial::z();
    ZPolynomial p = z * z * (z - ZPolynomial(rf("t^2"))) * (z - ZPolynomial(rf("t^2"))) * (z - ZPolynomial(rf("1")));
    ZPolynomial sf = squarefree_part(p);
    CHECK(sf.degree() == 3);
    auto roots = field_roots(sf);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].is_zero());
    CHECK(roots[1].is_one());
    CHECK(roots[2] == rf("t^2"));
    CHECK_THROWS_AS(field_roots(z * z - ZPolynomial(rf("t"))), EigenvaluesNotInField);
}
