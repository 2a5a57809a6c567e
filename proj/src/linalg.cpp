#include "dfbm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace dfbm {

namespace {

constexpr int kMaxSweeps = 100;

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw DomainError(std::string(what) + ": non-finite entry");
    }
}

// Kuhn–Munkres on a square cost matrix (minimization). Returns assignment[row] = column.
std::vector<int> solve_assignment(const Matrix& cost) {
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> assignment(n, -1);
    for (int j = 1; j <= n; ++j) {
        assignment[p[j] - 1] = j - 1;
    }
    return assignment;
}

} // namespace

SymMatrix::SymMatrix(std::size_t dim) : m_(Matrix::Zero(dim, dim)) {
    if (dim == 0) throw DomainError("SymMatrix: dim must be >= 1");
}

SymMatrix::SymMatrix(const Matrix& m) : m_(m) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw DomainError("SymMatrix: input must be square with dim >= 1");
    }
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
            m_(j, i) = m_(i, j);
        }
    }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
    return SymMatrix(Matrix::Identity(dim, dim));
}

SymMatrix SymMatrix::ones(std::size_t dim) {
    return SymMatrix(Matrix::Ones(dim, dim));
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
}

SpectralDecomp sym_eig(const SymMatrix& a) {
    require_finite(a.matrix(), "sym_eig");
    const Eigen::Index n = a.matrix().rows();
    Matrix w = a.matrix();
    Matrix v = Matrix::Identity(n, n);

    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        int rotations = 0;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = w(p, q);
                const double app = w(p, p);
                const double aqq = w(q, q);
                // Once later sweeps reach, a coupling that cannot move either
                // diagonal entry is dropped; this keeps small eigenvalues
                // accurate relative to their own size.
                const double g = 100.0 * std::abs(apq);
                if (std::abs(apq) < std::numeric_limits<double>::min() ||
                    (sweep > 3 && std::abs(app) + g == std::abs(app) &&
                     std::abs(aqq) + g == std::abs(aqq))) {
                    w(p, q) = 0.0;
                    w(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double wkp = w(k, p);
                    const double wkq = w(k, q);
                    w(k, p) = c * wkp - s * wkq;
                    w(k, q) = s * wkp + c * wkq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double wpk = w(p, k);
                    const double wqk = w(q, k);
                    w(p, k) = c * wpk - s * wqk;
                    w(q, k) = s * wpk + c * wqk;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
                ++rotations;
            }
        }
        converged = (rotations == 0);
    }
    if (!converged) {
        throw NumericalError("sym_eig: Jacobi sweeps did not converge");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return w(x, x) < w(y, y); });

    SpectralDecomp out{Vector(n), Matrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = w(src, src);
        Vector col = v.col(src);
        Eigen::Index arg = 0;
        for (Eigen::Index i = 1; i < n; ++i) {
            if (std::abs(col(i)) > std::abs(col(arg))) arg = i;
        }
        if (col(arg) < 0.0) col = -col;
        out.eigenvectors.col(k) = col;
    }
    return out;
}

double frobenius_norm(const Matrix& a) {
    require_finite(a, "frobenius_norm");
    return a.norm();
}

double frobenius_norm(const SymMatrix& a) { return frobenius_norm(a.matrix()); }

double orthonormality_defect(const Matrix& q) {
    return (q.transpose() * q - Matrix::Identity(q.cols(), q.cols())).norm();
}

Matrix align_columns(const Matrix& reference, const Matrix& candidate) {
    if (reference.rows() != reference.cols() || candidate.rows() != candidate.cols() ||
        reference.rows() != candidate.rows() || reference.rows() == 0) {
        throw DomainError("align_columns: inputs must be square and of equal size");
    }
    require_finite(reference, "align_columns");
    require_finite(candidate, "align_columns");
    if (orthonormality_defect(reference) > 1e-8 || orthonormality_defect(candidate) > 1e-8) {
        throw DomainError("align_columns: columns are not orthonormal");
    }

    const Matrix overlap = reference.transpose() * candidate;
    const std::vector<int> assignment = solve_assignment(-overlap.cwiseAbs());

    Matrix aligned(candidate.rows(), candidate.cols());
    for (Eigen::Index k = 0; k < reference.cols(); ++k) {
        const int src = assignment[static_cast<std::size_t>(k)];
        const double sign = overlap(k, src) < 0.0 ? -1.0 : 1.0;
        aligned.col(k) = sign * candidate.col(src);
    }
    return aligned;
}

int numeric_rank(const SymMatrix& a, double tol) {
    if (!(tol > 0.0)) throw DomainError("numeric_rank: tol must be positive");
    const Vector ev = sym_eig(a).eigenvalues.cwiseAbs();
    const double cutoff = tol * std::max(1.0, ev.maxCoeff());
    return static_cast<int>((ev.array() > cutoff).count());
}

} // namespace dfbm
