#pragma once

#include "rumin/matrix.hpp"
#include "rumin/rational_function.hpp"
#include "rumin/zrational.hpp"

#include <vector>

namespace rumin {

using ScalarMatrix = Matrix<RationalFunction>;

struct RowEchelon {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over the rational-function field.
RowEchelon row_reduce(const ScalarMatrix& m);
std::size_t rank(const ScalarMatrix& m);
RationalFunction trace(const ScalarMatrix& m);

/// Throws InternalCheckFailed for singular input.
ScalarMatrix inverse(const ScalarMatrix& m);

/// Moore-Penrose pseudoinverse via a rank factorisation.
ScalarMatrix pseudoinverse(const ScalarMatrix& m);

/// I - M^+ M for symmetric M. Throws NotSymmetric.
ScalarMatrix kernel_projector(const ScalarMatrix& m);

/// det(x I - M) as a polynomial in x.
ZPolynomial characteristic_polynomial(const ScalarMatrix& m);

} // namespace rumin
