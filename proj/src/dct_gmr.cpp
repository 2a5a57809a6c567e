#include "dfbm/dct_gmr.hpp"

#include <cmath>
#include <numbers>

namespace dfbm {

Matrix dct_matrix(int window) {
    if (window < 1) throw DomainError("dct_matrix: window must be >= 1");
    const double m = window;
    Matrix q(window, window);
    for (int row = 0; row < window; ++row) {
        q(row, 0) = std::sqrt(1.0 / m);
        for (int k = 1; k < window; ++k) {
            q(row, k) = std::sqrt(2.0 / m) *
                        std::cos(std::numbers::pi * (2.0 * row + 1.0) * k / (2.0 * m));
        }
    }
    return q;
}

Matrix dct_matrix_eigen_order(int window) {
    return dct_matrix(window).rowwise().reverse();
}

Matrix jacobi_matrix(int window, const JacobiParams& p) {
    if (window < 2) throw DomainError("jacobi_matrix: window must be >= 2");
    Matrix j = Matrix::Identity(window, window);
    for (int i = 0; i + 1 < window; ++i) {
        j(i, i + 1) = -p.alpha;
        j(i + 1, i) = -p.alpha;
    }
    j(0, 0) = 1.0 - p.k1 * p.alpha;
    j(window - 1, window - 1) = 1.0 - p.k2 * p.alpha;
    // For M = 2 the corners coincide with the off-diagonal and add to it.
    j(0, window - 1) += p.k3 * p.alpha;
    j(window - 1, 0) += p.k4 * p.alpha;
    return j;
}

SymMatrix precision_half(int n, int window) {
    if (n < 1) throw DomainError("precision_half: n must be >= 1");
    const JacobiParams params{0.5, 1.0 - 1.0 / n, 1.0, 0.0, 0.0};
    return SymMatrix(2.0 * jacobi_matrix(window, params));
}

} // namespace dfbm
