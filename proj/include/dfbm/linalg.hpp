#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "dfbm/errors.hpp"

namespace dfbm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/**
 * Dense square symmetric matrix.
 *
 * Construction from a general matrix copies the upper triangle onto the
 * lower one, so entries(i, j) == entries(j, i) holds bit-for-bit.
 */
class SymMatrix {
public:
    explicit SymMatrix(std::size_t dim);
    explicit SymMatrix(const Matrix& m);

    static SymMatrix identity(std::size_t dim);
    static SymMatrix ones(std::size_t dim);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    /// Writes both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    const Matrix& matrix() const { return m_; }

    double trace() const { return m_.trace(); }

private:
    Matrix m_;
};

/// Ascending eigenvalues with the matching orthonormal eigenvector columns.
struct SpectralDecomp {
    Vector eigenvalues;
    Matrix eigenvectors;
};

/**
 * Cyclic Jacobi eigendecomposition.
 *
 * Rotations sweep the strict upper triangle row by row, so identical input
 * gives bit-identical output. Each eigenvector is signed so that its
 * largest-magnitude entry (first one on ties) is positive; equal
 * eigenvalues keep the column order the sweep produced.
 *
 * Throws DomainError on a non-finite entry and NumericalError if the sweep
 * budget runs out.
 */
SpectralDecomp sym_eig(const SymMatrix& a);

double frobenius_norm(const Matrix& a);
double frobenius_norm(const SymMatrix& a);

/**
 * Signed column permutation of `candidate` maximizing trace(referenceᵀ · result).
 *
 * The matching is solved exactly as an assignment problem on |referenceᵀ · candidate|
 * for any dimension. Both inputs must be square, of equal size, and have
 * orthonormal columns to within 1e-8 (Frobenius norm of QᵀQ - I).
 */
Matrix align_columns(const Matrix& reference, const Matrix& candidate);

/// Number of |eigenvalues| above tol * max(1, largest |eigenvalue|).
int numeric_rank(const SymMatrix& a, double tol);

/// ‖QᵀQ - I‖_F.
double orthonormality_defect(const Matrix& q);

} // namespace dfbm
