#include "dfbm/fbm_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dfbm {

namespace {

double first_order_scale(double h) {
    const double s = std::abs(std::sin(std::numbers::pi * h));
    if (s < 1e-15) throw DomainError("sigma_h_sq: sin(pi H) vanishes");
    return 1.0 / (std::tgamma(2.0 * h + 1.0) * s);
}

double generalized_binomial(double top, int j) {
    double out = 1.0;
    for (int k = 0; k < j; ++k) out *= (top - k) / (k + 1);
    return out;
}

} // namespace

HurstParams::HurstParams(double hurst, int order) : hurst_(hurst), order_(order) {
    if (order < 1) throw DomainError("HurstParams: order must be >= 1");
    if (!std::isfinite(hurst) || !(hurst > order - 1) || !(hurst < order)) {
        throw DomainError("HurstParams: H = " + std::to_string(hurst) +
                          " outside (" + std::to_string(order - 1) + ", " +
                          std::to_string(order) + ")");
    }
}

CovSpec::CovSpec(int n_, int window, HurstParams hurst_) : n(n_), M(window), hurst(hurst_) {
    if (n < 1) throw DomainError("CovSpec: n must be >= 1");
    if (M < 2) throw DomainError("CovSpec: M must be >= 2");
}

double sigma_h_sq(const HurstParams& hurst, SigmaConvention conv) {
    const double h = hurst.hurst();
    const int m = hurst.order();
    if (m == 1 || conv == SigmaConvention::Gamma) return first_order_scale(h);
    double denom = 1.0;
    for (int k = 0; k <= 2 * m - 3; ++k) denom *= (2.0 * h - k);
    return first_order_scale(hurst.fractional()) / denom;
}

namespace detail {

double autocov_series(int n1, int n2, const HurstParams& hurst, double sigma_sq) {
    const double h2 = 2.0 * hurst.hurst();
    const int m = hurst.order();
    const double a = n1;
    const double b = n2;
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
        // (n1/n2)^j |n2|^{2H} written without the division so n = 0 is finite.
        const double bracket = std::pow(a, j) * std::pow(b, h2 - j) +
                               std::pow(b, j) * std::pow(a, h2 - j);
        sum += ((j % 2 == 0) ? 1.0 : -1.0) * generalized_binomial(h2, j) * bracket;
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * 0.5 * sigma_sq * (std::pow(std::abs(a - b), h2) - sum);
}

} // namespace detail

double autocov(int n1, int n2, const HurstParams& hurst, SigmaConvention conv) {
    if (n1 < 0 || n2 < 0) throw DomainError("autocov: time indices must be >= 0");
    const double s = sigma_h_sq(hurst, conv);
    const double h2 = 2.0 * hurst.hurst();
    // Evaluate with the arguments ordered so r(n1, n2) == r(n2, n1) bit for bit.
    const double a = std::min(n1, n2);
    const double b = std::max(n1, n2);
    const double lag = std::pow(std::abs(a - b), h2);
    switch (hurst.order()) {
    case 1:
        return 0.5 * s * (std::pow(a, h2) - lag + std::pow(b, h2));
    case 2:
        return 0.5 * s * (lag - std::pow(a, h2) - std::pow(b, h2)) +
               0.5 * s * (h2 * a * std::pow(b, h2 - 1.0) + h2 * b * std::pow(a, h2 - 1.0));
    default:
        return detail::autocov_series(static_cast<int>(a), static_cast<int>(b), hurst, s);
    }
}

SymMatrix covariance_matrix(const CovSpec& spec, SigmaConvention conv) {
    SymMatrix r(static_cast<std::size_t>(spec.M));
    for (int i = 0; i < spec.M; ++i) {
        for (int j = i; j < spec.M; ++j) {
            r.set(i, j, autocov(spec.n + i, spec.n + j, spec.hurst, conv));
        }
    }
    return r;
}

int n_min(int window, double hurst, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("n_min: alpha must be positive");
    if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("n_min: H must lie in (0, 1)");
    if (window < 1) throw DomainError("n_min: window must be >= 1");
    const double v = (window - 1) * hurst * std::sqrt(std::abs(2.0 - 1.0 / hurst) / alpha);
    return static_cast<int>(std::ceil(v));
}

SymMatrix distance_power_matrix(int window, double exponent) {
    SymMatrix c(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) {
        for (int j = i + 1; j < window; ++j) {
            c.set(i, j, std::pow(static_cast<double>(j - i), exponent));
        }
    }
    return c;
}

StructuralSet structural_matrices(const CovSpec& spec) {
    const int M = spec.M;
    const double n = spec.n;
    const double h = spec.hurst.hurst();
    const auto dim = static_cast<std::size_t>(M);

    SymMatrix a_half(dim), b(dim), d(dim);
    for (int i = 0; i < M; ++i) {
        for (int j = i; j < M; ++j) {
            const double lo = std::min(i, j);
            a_half.set(i, j, 1.0 + lo / n);
            b.set(i, j, i + j);
            d.set(i, j, lo);
        }
    }

    double eps2 = 1.0 / (2.0 * std::pow(n, 2.0 * h));
    if (spec.hurst.order() == 2) eps2 /= (2.0 * h - 1.0);

    return StructuralSet{SymMatrix::ones(dim), a_half, b, distance_power_matrix(M, 2.0 * h), d,
                         1.0 / n, eps2};
}

SymMatrix covariance_hat(const CovSpec& spec) {
    const int m = spec.hurst.order();
    if (m != 1 && m != 2) {
        throw UnsupportedOrderError("covariance_hat: order " + std::to_string(m) +
                                    " has no structural approximation");
    }
    const StructuralSet s = structural_matrices(spec);
    const double h = spec.hurst.hurst();
    double scale = sigma_h_sq(spec.hurst) * std::pow(static_cast<double>(spec.n), 2.0 * h);
    if (m == 2) scale *= (2.0 * h - 1.0);

    // The |i - j|^{2H} term enters with a minus sign for both orders.
    const Matrix body = s.A_half.matrix() + s.eps1 * (h * s.B.matrix() - s.D.matrix()) -
                        s.eps2 * s.C.matrix();
    return SymMatrix(scale * body);
}

double approx_error_hat(const CovSpec& spec) {
    const SymMatrix r = covariance_matrix(spec);
    const SymMatrix r_hat = covariance_hat(spec);
    return 100.0 * frobenius_norm(Matrix(r.matrix() - r_hat.matrix())) / frobenius_norm(r);
}

} // namespace dfbm
