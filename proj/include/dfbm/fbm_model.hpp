#pragma once

#include "dfbm/linalg.hpp"

namespace dfbm {

/// Hurst exponent together with the process order m; requires m - 1 < H < m.
class HurstParams {
public:
    HurstParams(double hurst, int order);

    double hurst() const { return hurst_; }
    int order() const { return order_; }

    /// H - (m - 1), the exponent of the underlying first-order process.
    double fractional() const { return hurst_ - (order_ - 1); }

private:
    double hurst_;
    int order_;
};

/// One covariance window: samples n, n+1, ..., n+M-1.
struct CovSpec {
    CovSpec(int n, int window, HurstParams hurst);

    int n;
    int M;
    HurstParams hurst;
};

/// How the variance scale of orders m >= 2 is obtained.
enum class SigmaConvention {
    /// σ²_{H-m+1} / ((2H)(2H-1)...(2H-(2m-3))), chained down from the first-order scale.
    Chain,
    /// 1 / (Γ(2H+1) |sin(πH)|) evaluated at the full H.
    Gamma,
};

/// Variance scale σ²_H. For m = 1 both conventions coincide.
double sigma_h_sq(const HurstParams& hurst, SigmaConvention conv = SigmaConvention::Chain);

/**
 * Auto-covariance r(n1, n2) of the m-th order discrete fBm.
 *
 * m = 1 and m = 2 use their closed forms; m >= 3 uses the general
 * generalized-binomial series.
 */
double autocov(int n1, int n2, const HurstParams& hurst,
               SigmaConvention conv = SigmaConvention::Chain);

namespace detail {
/// The general series for any m, without the m = 1, 2 shortcuts. Exposed for cross-checks.
double autocov_series(int n1, int n2, const HurstParams& hurst, double sigma_sq);
} // namespace detail

/// R(n) with entries autocov(n + i, n + j), zero-based i, j.
SymMatrix covariance_matrix(const CovSpec& spec, SigmaConvention conv = SigmaConvention::Chain);

/// Smallest window start beyond which the structural approximation stays within alpha.
int n_min(int window, double hurst, double alpha);

/// Building blocks of the structural approximation Â.
struct StructuralSet {
    SymMatrix A;      ///< all ones
    SymMatrix A_half; ///< 1 + min(i, j) / n  (the H = 1/2 covariance divided by n)
    SymMatrix B;      ///< i + j
    SymMatrix C;      ///< |i - j|^{2H}
    SymMatrix D;      ///< min(i, j)
    double eps1;
    double eps2;
};

/// Structural matrices for the given window (C uses the full 2H of the process order).
StructuralSet structural_matrices(const CovSpec& spec);

/// |i - j|^{exponent} on an M x M grid.
SymMatrix distance_power_matrix(int window, double exponent);

/// Structural approximation Â of R(n); orders 1 and 2 only.
SymMatrix covariance_hat(const CovSpec& spec);

/// 100 · ‖R - Â‖_F / ‖R‖_F.
double approx_error_hat(const CovSpec& spec);

} // namespace dfbm
