#pragma once

#include "rumin/scalar_linalg.hpp"
#include "rumin/zrational.hpp"

#include <vector>

namespace rumin {

/// Roots in the coefficient field of a squarefree polynomial, ordered with 0
/// first. Throws EigenvaluesNotInField when the polynomial does not split.
std::vector<RationalFunction> field_roots(const ZPolynomial& p);

/// Monic squarefree part.
ZPolynomial squarefree_part(const ZPolynomial& p);

struct Eigenspace {
    RationalFunction eigenvalue;
    ScalarMatrix projector;
};

/// Distinct eigenvalues of a diagonalisable matrix with Lagrange projectors.
std::vector<Eigenspace> spectral_decompose(const ScalarMatrix& m);

/// Orders field elements: 0 first, then by degree, then by text.
bool eigenvalue_less(const RationalFunction& a, const RationalFunction& b);

} // namespace rumin
