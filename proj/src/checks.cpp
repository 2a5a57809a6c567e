#include "dfbm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dfbm/dct_gmr.hpp"
#include "dfbm/experiments.hpp"
#include "dfbm/fbm_model.hpp"
#include "dfbm/perturbation.hpp"

namespace dfbm {

namespace {

constexpr int kMaxWindow = 9;

CheckResult at_most(std::string name, double threshold, const std::function<double()>& worst) {
    const double w = worst();
    return CheckResult{std::move(name), std::isfinite(w) && w <= threshold, w, threshold};
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace

std::vector<CheckResult> run_checks() {
    std::vector<CheckResult> out;
    const std::vector<double> all_h{0.2, 0.45, 0.5, 0.8, 1.2, 1.45, 1.8};
    const std::vector<double> first_h{0.2, 0.45, 0.8};

    out.push_back(at_most("sym_eig reconstruction on covariance grid", 1e-8, [&] {
        double worst = 0.0;
        for (int n : {1, 10, 200, 2000})
            for (int m = 2; m <= kMaxWindow; ++m)
                for (double h : all_h) {
                    const SymMatrix r = covariance_matrix(CovSpec(n, m, HurstParams(h, h < 1 ? 1 : 2)));
                    const SpectralDecomp d = sym_eig(r);
                    const Matrix back = d.eigenvectors * d.eigenvalues.asDiagonal() *
                                        d.eigenvectors.transpose();
                    const double scale = std::max(1.0, frobenius_norm(r));
                    worst = std::max(worst, frobenius_norm(Matrix(back - r.matrix())) / scale);
                    worst = std::max(worst, std::abs(d.eigenvalues.sum() - r.trace()) / scale);
                    worst = std::max(worst, orthonormality_defect(d.eigenvectors));
                }
        return worst;
    }));

    out.push_back(at_most("covariance positive semidefinite", 1e-8, [&] {
        double worst = 0.0;
        for (int n : {1, 10, 200, 2000})
            for (int m = 2; m <= kMaxWindow; ++m)
                for (double h : all_h) {
                    const SymMatrix r = covariance_matrix(CovSpec(n, m, HurstParams(h, h < 1 ? 1 : 2)));
                    const double lo = sym_eig(r).eigenvalues(0);
                    worst = std::max(worst, -lo / frobenius_norm(r));
                }
        return worst;
    }));

    out.push_back(at_most("A_half - D/n equals the all-ones matrix", 1e-14, [&] {
        double worst = 0.0;
        for (int n : {1, 3, 7, 200})
            for (int m = 2; m <= kMaxWindow; ++m) {
                const StructuralSet s = structural_matrices(CovSpec(n, m, HurstParams(0.45, 1)));
                const Matrix diff = s.A_half.matrix() - s.eps1 * s.D.matrix() - s.A.matrix();
                worst = std::max(worst, diff.cwiseAbs().maxCoeff());
            }
        return worst;
    }));

    out.push_back(at_most("structural approximation exact at H = 1/2 (percent)", 1e-10, [&] {
        double worst = 0.0;
        for (int n : {1, 2, 10, 200, 2000})
            for (int m = 2; m <= kMaxWindow; ++m)
                worst = std::max(worst, approx_error_hat(CovSpec(n, m, HurstParams(0.5, 1))));
        return worst;
    }));

    out.push_back(at_most("structural approximation within alpha beyond n_min (ratio)", 1.0, [&] {
        double worst = 0.0;
        for (double alpha : {0.01, 0.05})
            for (int m : {3, 5, 9})
                for (double h : first_h) {
                    const int nm = n_min(m, h, alpha);
                    for (int n : {nm + 1, 2 * nm + 1, 200, 2000}) {
                        const double e = approx_error_hat(CovSpec(n, m, HurstParams(h, 1))) / 100.0;
                        worst = std::max(worst, e / alpha);
                    }
                }
        return worst;
    }));

    out.push_back(at_most("variance diagonal matches n^{2H} sigma^2", 1e-12, [&] {
        double worst = 0.0;
        for (int n : {1, 10, 200})
            for (double h : first_h) {
                const HurstParams hp(h, 1);
                const SymMatrix r = covariance_matrix(CovSpec(n, 9, hp));
                for (int i = 0; i < 9; ++i) {
                    const double expect = std::pow(n + i, 2.0 * h) * sigma_h_sq(hp);
                    worst = std::max(worst, std::abs(r(i, i) - expect) / expect);
                }
            }
        return worst;
    }));

    out.push_back(at_most("DCT diagonalizes J_D(1,1,0,0)", 1e-10, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m) {
            const Matrix j = jacobi_matrix(m, JacobiParams{});
            const Matrix q = dct_matrix(m);
            Matrix d = q.transpose() * j * q;
            d.diagonal().setZero();
            worst = std::max(worst, d.norm() / j.norm());
        }
        return worst;
    }));

    out.push_back(at_most("precision_half times R(H=1/2) is the identity", 1e-8, [&] {
        double worst = 0.0;
        for (int n : {1, 2, 10, 200})
            for (int m = 2; m <= kMaxWindow; ++m) {
                const Matrix prod = precision_half(n, m).matrix() *
                                    covariance_matrix(CovSpec(n, m, HurstParams(0.5, 1))).matrix();
                worst = std::max(worst, (prod - Matrix::Identity(m, m)).norm());
            }
        return worst;
    }));

    out.push_back(at_most("component matrix identities", 1e-12, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m) {
            const ComponentSet cs = component_matrices(m);
            const Matrix& z1 = cs.Z10.matrix();
            const Matrix& z2 = cs.Z20.matrix();
            const Matrix id = Matrix::Identity(m, m);
            worst = std::max({worst, (z1 + z2 - id).cwiseAbs().maxCoeff(),
                              (z1 * z2).cwiseAbs().maxCoeff(), (z1 * z1 - z1).cwiseAbs().maxCoeff(),
                              (z2 * z2 - z2).cwiseAbs().maxCoeff()});
            for (const SymMatrix& zr : cs.Z1r)
                worst = std::max(worst, (zr.matrix() * z1 - zr.matrix()).cwiseAbs().maxCoeff());
        }
        return worst;
    }));

    out.push_back(at_most("resolvent equals direct inverse (relative)", 1e-10, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m)
            for (double z : {-1.0, 1.0, 0.5, m + 1.0}) {
                const Matrix direct =
                    (z * Matrix::Identity(m, m) - Matrix::Ones(m, m)).inverse();
                worst = std::max(worst, (resolvent(z, m).matrix() - direct).norm() / direct.norm());
            }
        return worst;
    }));

    out.push_back(at_most("Z10 B Z10 vanishes", 1e-12, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m) {
            const Matrix z = component_matrices(m).Z10.matrix();
            const StructuralSet s = structural_matrices(CovSpec(1, m, HurstParams(0.45, 1)));
            worst = std::max(worst, (z * s.B.matrix() * z).cwiseAbs().maxCoeff());
        }
        return worst;
    }));

    out.push_back(at_most("reduced operator rank deficit and minor a > 0 violations", 0.0, [&] {
        double bad = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m)
            for (double h : first_h) {
                if (numeric_rank(reduced_operator(m, h), 1e-10) != m - 1) bad += 1.0;
                if (minor_spectrum(m, h).a.minCoeff() <= 0.0) bad += 1.0;
            }
        return bad;
    }));

    out.push_back(at_most("largest-eigenvalue model at n = 2000 (relative)", 0.01, [&] {
        double worst = 0.0;
        for (int m : {2, 3, 5})
            for (double h : first_h) {
                const SymMatrix r = covariance_matrix(CovSpec(2000, m, HurstParams(h, 1)));
                const double top = sym_eig(r).eigenvalues(m - 1);
                worst = std::max(worst, relative(lambda_major(2000, m, h), top));
            }
        return worst;
    }));

    out.push_back(at_most("minor columns of Q-hat independent of n", 0.0, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m)
            for (double h : first_h) {
                const Matrix a = q_hat(200, m, h);
                const Matrix b = q_hat(2000, m, h);
                worst = std::max(worst,
                                 (a.leftCols(m - 1) - b.leftCols(m - 1)).cwiseAbs().maxCoeff());
            }
        return worst;
    }));

    out.push_back(at_most("e_R equals off-diagonal energy of the DCT congruence", 1e-8, [&] {
        double worst = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m)
            for (double h : all_h) {
                const CovSpec spec(200, m, HurstParams(h, h < 1 ? 1 : 2));
                const AlgorithmAResult res = algorithm_a(spec);
                Matrix off = res.congruence;
                off.diagonal().setZero();
                const double lhs = e_tilde_r(spec) * frobenius_norm(res.covariance);
                const double rhs = 100.0 * off.norm();
                worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
            }
        return worst;
    }));

    out.push_back(at_most("e_R decreases from n = 200 to n = 2000 (violations)", 0.0, [&] {
        double bad = 0.0;
        for (int m = 2; m <= kMaxWindow; ++m)
            for (double h : {0.2, 0.45, 0.8, 1.2, 1.45, 1.8}) {
                const HurstParams hp(h, h < 1 ? 1 : 2);
                if (!(e_tilde_r(CovSpec(2000, m, hp)) < e_tilde_r(CovSpec(200, m, hp)))) bad += 1.0;
            }
        return bad;
    }));

    out.push_back(at_most("e_R smallest at H = 1/2 (violations)", 0.0, [&] {
        const double at_half = e_tilde_r(CovSpec(2000, 5, HurstParams(0.5, 1)));
        double bad = 0.0;
        for (double h : first_h)
            if (!(at_half < e_tilde_r(CovSpec(2000, 5, HurstParams(h, 1))))) bad += 1.0;
        return bad;
    }));

    return out;
}

} // namespace dfbm
