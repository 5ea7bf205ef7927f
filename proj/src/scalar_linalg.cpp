#include "rumin/scalar_linalg.hpp"

#include "rumin/error.hpp"

namespace rumin {

RowEchelon row_reduce(const ScalarMatrix& m) {
    ScalarMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        RationalFunction inv = RationalFunction(1) / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            RationalFunction f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const ScalarMatrix& m) { return row_reduce(m).pivots.size(); }

RationalFunction trace(const ScalarMatrix& m) {
    RationalFunction t;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

ScalarMatrix inverse(const ScalarMatrix& m) {
    if (!m.square()) throw ShapeMismatch("inverse of non-square " + m.shape() + " matrix");
    const std::size_t n = m.rows();
    ScalarMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [r, pivots] = row_reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        throw InternalCheckFailed("matrix is singular");
    ScalarMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
    return out;
}

ScalarMatrix pseudoinverse(const ScalarMatrix& m) {
    auto [r, pivots] = row_reduce(m);
    const std::size_t k = pivots.size();
    if (k == 0) return ScalarMatrix(m.cols(), m.rows());
    ScalarMatrix c(m.rows(), k), f(k, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t p = 0; p < k; ++p) c(i, p) = m(i, pivots[p]);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t j = 0; j < m.cols(); ++j) f(p, j) = r(p, j);
    ScalarMatrix ft = f.transpose(), ct = c.transpose();
    return ft * inverse(f * ft) * inverse(ct * c) * ct;
}

ScalarMatrix kernel_projector(const ScalarMatrix& m) {
    if (!m.square() || !(m == m.transpose())) throw NotSymmetric("kernel projector needs a symmetric matrix");
    return ScalarMatrix::identity(m.rows()) - pseudoinverse(m) * m;
}

ZPolynomial characteristic_polynomial(const ScalarMatrix& m) {
    if (!m.square()) throw ShapeMismatch("characteristic polynomial of non-square matrix");
    // Faddeev-LeVerrier.
    const std::size_t n = m.rows();
    std::vector<RationalFunction> c(n + 1);
    c[n] = 1;
    ScalarMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        ScalarMatrix prev = mk;
        for (std::size_t i = 0; i < n; ++i) prev(i, i) += c[n - k + 1];
        mk = m * prev;
        c[n - k] = -trace(mk) / RationalFunction(static_cast<long>(k));
    }
    return ZPolynomial(std::move(c));
}

} // namespace rumin
