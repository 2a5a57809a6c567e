#pragma once

#include "dfbm/linalg.hpp"

namespace dfbm {

/// Coupling and boundary parameters of the tri-diagonal Jacobi matrix J_D.
struct JacobiParams {
    double alpha = 0.5;
    double k1 = 1.0;
    double k2 = 1.0;
    double k3 = 0.0;
    double k4 = 0.0;
};

/// Orthonormal even DCT (DCT-II) basis; column 0 is the constant vector.
Matrix dct_matrix(int window);

/**
 * DCT columns arranged to pair with ascending covariance eigenvalues.
 *
 * The covariance is proportional to the inverse of J_D(1, 1, 0, 0), whose
 * eigenvalues grow with frequency, so the constant column pairs with the
 * largest covariance eigenvalue: column k here is DCT column M-1-k.
 */
Matrix dct_matrix_eigen_order(int window);

/// J_D: diagonal (1 - k1·α, 1, ..., 1, 1 - k2·α), off-diagonals -α, corners k3·α (top right) and k4·α.
Matrix jacobi_matrix(int window, const JacobiParams& params);

/// Inverse of the H = 1/2 covariance R(n): 2 · J_D(α = 1/2; 1 - 1/n, 1, 0, 0).
SymMatrix precision_half(int n, int window);

} // namespace dfbm
