#pragma once

#include <vector>

#include "dfbm/linalg.hpp"

namespace dfbm {

/**
 * Spectral resolution of the all-ones matrix A (eigenvalues 0 with
 * multiplicity M-1 and M with multiplicity one).
 *
 * Z10 projects onto the kernel (centering), Z20 onto the constant vector
 * (averaging). A is diagonalizable, so the nilpotent parts Z1r, r >= 1,
 * come out as zero matrices.
 */
struct ComponentSet {
    SymMatrix Z10;
    SymMatrix Z20;
    std::vector<SymMatrix> Z1r; ///< r = 1 .. M-2
    SymMatrix E1;               ///< reduced resolvent at eigenvalue 0
    SymMatrix E2;               ///< reduced resolvent at eigenvalue M
};

ComponentSet component_matrices(int window);

/// (zI - A)⁻¹ assembled from the component matrices. Throws PoleError for z ∈ {0, M}.
SymMatrix resolvent(double z, int window);

/// S = Z10 · (-C) · Z10 with C = |i - j|^{2H}, 0 < H < 1. Positive semidefinite of rank M-1.
SymMatrix reduced_operator(int window, double hurst);

/// Nonzero eigenpairs of the reduced operator.
struct MinorSpectrum {
    Vector a;   ///< M-1 eigenvalues, ascending
    Matrix phi; ///< M x (M-1), orthonormal columns orthogonal to the constant vector
};

MinorSpectrum minor_spectrum(int window, double hurst);

/// Time-invariant model (σ²_H / 2) · a_r of the M-1 smallest covariance eigenvalues.
Vector minor_model_eigenvalues(int window, double hurst);

/// Closed-form model of the largest covariance eigenvalue at window start n.
double lambda_major(int n, int window, double hurst);

/// First-order model of the top eigenvector.
struct MajorEigenvector {
    /// (1/√M)·1 + ε₂ · E2 · A⁽¹⁾ · (1/√M)·1, normalized to unit length.
    Vector phi;
    /// The closed-form scalar multiplying (1/√M)·1 in the collapsed model.
    double closed_form_scale;
    /// ‖phi - (1/√M)·1‖₂: how far the first-order form departs from the
    /// direction the scalar form keeps.
    double closed_form_gap;
};

MajorEigenvector phi_major(int n, int window, double hurst);

/// Q̂: minor eigenvectors by ascending a, then the major eigenvector, made orthonormal.
Matrix q_hat(int n, int window, double hurst);

} // namespace dfbm
