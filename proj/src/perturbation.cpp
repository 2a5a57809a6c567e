#include "dfbm/perturbation.hpp"

#include <cmath>
#include <string>

#include "dfbm/fbm_model.hpp"

namespace dfbm {

namespace {

void require_first_order(double hurst, const char* where) {
    if (!(hurst > 0.0 && hurst < 1.0)) {
        throw DomainError(std::string(where) + ": H must lie in (0, 1)");
    }
}

void require_window(int window, const char* where) {
    if (window < 2) throw DomainError(std::string(where) + ": window must be >= 2");
}

// Modified Gram–Schmidt in column order.
Matrix orthonormalize(Matrix q) {
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        for (Eigen::Index j = 0; j < k; ++j) {
            q.col(k) -= q.col(j).dot(q.col(k)) * q.col(j);
        }
        q.col(k).normalize();
    }
    return q;
}

} // namespace

ComponentSet component_matrices(int window) {
    require_window(window, "component_matrices");
    const double inv_m = 1.0 / window;
    const Matrix ones = Matrix::Ones(window, window);
    const Matrix z20 = inv_m * ones;
    const Matrix z10 = Matrix::Identity(window, window) - z20;

    // A^r Z10 carried as A^r (M·Z10) / M: M·Z10 = M·I - A has integer entries,
    // so the products stay exact and the nilpotent parts come out exactly.
    std::vector<SymMatrix> z1r;
    Matrix prev = window * Matrix::Identity(window, window) - ones;
    for (int r = 1; r <= window - 2; ++r) {
        prev = ones * prev;
        z1r.emplace_back(Matrix(inv_m * prev));
    }
    return ComponentSet{SymMatrix(z10), SymMatrix(z20), std::move(z1r),
                        SymMatrix(Matrix(-inv_m * z20)), SymMatrix(Matrix(inv_m * z10))};
}

SymMatrix resolvent(double z, int window) {
    require_window(window, "resolvent");
    const double m = window;
    if (std::abs(z) <= 1e-12 || std::abs(z - m) <= 1e-12 * m) {
        throw PoleError("resolvent: z lies on the spectrum {0, M}");
    }
    const ComponentSet cs = component_matrices(window);
    Matrix out = cs.Z10.matrix() / z + cs.Z20.matrix() / (z - m);
    double factorial = 1.0;
    double zpow = z;
    for (std::size_t r = 1; r <= cs.Z1r.size(); ++r) {
        factorial *= static_cast<double>(r);
        zpow *= z;
        out += (factorial / zpow) * cs.Z1r[r - 1].matrix();
    }
    return SymMatrix(out);
}

SymMatrix reduced_operator(int window, double hurst) {
    require_window(window, "reduced_operator");
    require_first_order(hurst, "reduced_operator");
    const ComponentSet cs = component_matrices(window);
    const Matrix& z10 = cs.Z10.matrix();
    const SymMatrix c = distance_power_matrix(window, 2.0 * hurst);
    return SymMatrix(Matrix(z10 * (-c.matrix()) * z10));
}

MinorSpectrum minor_spectrum(int window, double hurst) {
    const SpectralDecomp eig = sym_eig(reduced_operator(window, hurst));

    // The kernel direction is the constant vector; drop the column most aligned with it.
    Eigen::Index kernel = 0;
    double best = -1.0;
    for (Eigen::Index k = 0; k < eig.eigenvectors.cols(); ++k) {
        const double overlap = std::abs(eig.eigenvectors.col(k).sum());
        if (overlap > best) {
            best = overlap;
            kernel = k;
        }
    }

    MinorSpectrum out{Vector(window - 1), Matrix(window, window - 1)};
    Eigen::Index dst = 0;
    for (Eigen::Index k = 0; k < eig.eigenvectors.cols(); ++k) {
        if (k == kernel) continue;
        out.a(dst) = eig.eigenvalues(k);
        out.phi.col(dst) = eig.eigenvectors.col(k);
        ++dst;
    }
    return out;
}

Vector minor_model_eigenvalues(int window, double hurst) {
    const double sigma_sq = sigma_h_sq(HurstParams(hurst, 1));
    return 0.5 * sigma_sq * minor_spectrum(window, hurst).a;
}

double lambda_major(int n, int window, double hurst) {
    require_window(window, "lambda_major");
    if (n < 1) throw DomainError("lambda_major: n must be >= 1");
    const double s = sigma_h_sq(HurstParams(hurst, 1));
    const double h = hurst;
    const double m = window;
    const double nn = n;
    double tail = 0.0;
    for (int i = 1; i < window; ++i) tail += i * std::pow(m - i, 2.0 * h);
    return 0.5 * s * (2.0 * m * std::pow(nn, 2.0 * h) +
                      2.0 * h * std::pow(nn, 2.0 * h - 1.0) * m * (m - 1.0)) +
           0.5 * s * (-2.0 / m * tail +
                      2.0 * h * h * std::pow(nn, 2.0 * h - 2.0) * m * (m * m - 1.0) / 12.0);
}

MajorEigenvector phi_major(int n, int window, double hurst) {
    require_window(window, "phi_major");
    require_first_order(hurst, "phi_major");
    if (n < 1) throw DomainError("phi_major: n must be >= 1");
    const CovSpec spec(n, window, HurstParams(hurst, 1));
    const StructuralSet s = structural_matrices(spec);
    const ComponentSet cs = component_matrices(window);
    const double m = window;

    const Vector base = Vector::Constant(window, 1.0 / std::sqrt(m));
    // ε₂ · A⁽¹⁾ with A⁽¹⁾ = (ε₁/ε₂)·H·B - C, expanded to avoid the large ratio.
    const Matrix scaled_pert = s.eps1 * hurst * s.B.matrix() - s.eps2 * s.C.matrix();
    Vector phi = base + cs.E2.matrix() * (scaled_pert * base);
    phi.normalize();

    double tail = 0.0;
    for (int i = 1; i < window; ++i) tail += i * std::pow(m - i, 2.0 * hurst);
    const double scale = 1.0 + hurst * m * (m - 1.0) / n -
                         tail / (std::pow(static_cast<double>(n), 2.0 * hurst) * m);

    return MajorEigenvector{phi, scale, (phi - base).norm()};
}

Matrix q_hat(int n, int window, double hurst) {
    const MinorSpectrum minor = minor_spectrum(window, hurst);
    const MajorEigenvector major = phi_major(n, window, hurst);

    Matrix q(window, window);
    q.leftCols(window - 1) = minor.phi;
    q.col(window - 1) = major.phi;

    const Matrix gram = q.transpose() * q;
    const double worst =
        (gram - Matrix::Identity(window, window)).cwiseAbs().maxCoeff();
    if (worst > 1e-10) q = orthonormalize(q);
    return q;
}

} // namespace dfbm
