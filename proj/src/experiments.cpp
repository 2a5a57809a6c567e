#include "dfbm/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "dfbm/dct_gmr.hpp"
#include "dfbm/perturbation.hpp"

namespace dfbm {

namespace {

constexpr std::array<std::pair<Artifact, std::string_view>, 10> kArtifactNames{{
    {Artifact::Table1, "table1"},
    {Artifact::Table2, "table2"},
    {Artifact::Table3, "table3"},
    {Artifact::Table4, "table4"},
    {Artifact::Table5, "table5"},
    {Artifact::Fig1, "fig1"},
    {Artifact::Fig2, "fig2"},
    {Artifact::Fig3, "fig3"},
    {Artifact::Fig4, "fig4"},
    {Artifact::Fig5, "fig5"},
}};

constexpr std::array<std::pair<Metric, std::string_view>, 4> kMetricNames{{
    {Metric::EQhat, "e_Qhat"},
    {Metric::EQdct, "e_Qdct"},
    {Metric::ELambda, "e_lambda"},
    {Metric::ER, "e_R"},
}};

constexpr std::array<int, 2> kTableTimes{200, 2000};
constexpr std::array<int, 3> kFigureTimes{200, 500, 2000};
constexpr int kMinWindow = 2;
constexpr int kMaxWindow = 9;

double metric_value(Metric metric, const CovSpec& spec) {
    switch (metric) {
    case Metric::EQhat:
        return e_q(spec, BasisReference::QHat);
    case Metric::EQdct:
        return e_q(spec, BasisReference::Dct);
    case Metric::ELambda:
        return e_tilde_lambda(spec);
    case Metric::ER:
        return e_tilde_r(spec);
    }
    return 0.0;
}

ErrorRow make_row(Artifact artifact, Metric metric, int window, int n, double h, int order) {
    const CovSpec spec(n, window, HurstParams(h, order));
    return ErrorRow{artifact, window, n, h, order, metric, metric_value(metric, spec)};
}

} // namespace

std::string_view to_string(Artifact a) {
    for (const auto& [value, name] : kArtifactNames) {
        if (value == a) return name;
    }
    return "unknown";
}

std::string_view to_string(Metric m) {
    for (const auto& [value, name] : kMetricNames) {
        if (value == m) return name;
    }
    return "unknown";
}

Artifact parse_artifact(std::string_view s) {
    for (const auto& [value, name] : kArtifactNames) {
        if (name == s) return value;
    }
    throw DomainError("unknown artifact id '" + std::string(s) + "'");
}

Metric parse_metric(std::string_view s) {
    for (const auto& [value, name] : kMetricNames) {
        if (name == s) return value;
    }
    throw DomainError("unknown metric '" + std::string(s) + "'");
}

AlgorithmAResult algorithm_a(const CovSpec& spec) {
    const int order = spec.hurst.order();
    if (order != 1 && order != 2) {
        throw UnsupportedOrderError("algorithm_a: order must be 1 or 2");
    }
    SymMatrix r = covariance_matrix(spec);
    const Matrix q = dct_matrix(spec.M);
    Matrix congruence = q.transpose() * r.matrix() * q;
    Vector lambda = congruence.diagonal();
    SymMatrix r_tilde(Matrix(q * lambda.asDiagonal() * q.transpose()));
    return AlgorithmAResult{std::move(r), std::move(congruence), std::move(lambda),
                            std::move(r_tilde)};
}

double e_tilde_r(const CovSpec& spec) {
    const AlgorithmAResult res = algorithm_a(spec);
    const Matrix diff = res.covariance.matrix() - res.r_tilde.matrix();
    return 100.0 * frobenius_norm(diff) / frobenius_norm(res.covariance);
}

double e_tilde_lambda(const CovSpec& spec) {
    const AlgorithmAResult res = algorithm_a(spec);
    const Vector exact = sym_eig(res.covariance).eigenvalues;
    Vector approx = res.lambda_tilde;
    std::sort(approx.begin(), approx.end());
    return 100.0 * (exact - approx).norm() / exact.norm();
}

double e_q(const CovSpec& spec, BasisReference reference) {
    if (spec.hurst.order() != 1) {
        throw UnsupportedOrderError("e_q: eigenbasis errors are defined for order 1 only");
    }
    const Matrix actual = sym_eig(covariance_matrix(spec)).eigenvectors;
    const Matrix ref = reference == BasisReference::Dct
                           ? dct_matrix_eigen_order(spec.M)
                           : q_hat(spec.n, spec.M, spec.hurst.hurst());
    const Matrix aligned = align_columns(actual, ref);
    return 100.0 * frobenius_norm(Matrix(actual - aligned)) / std::sqrt(static_cast<double>(spec.M));
}

std::vector<ErrorRow> run_table(int table_id) {
    if (table_id < 1 || table_id > 5) {
        throw DomainError("run_table: table id must be in 1..5");
    }
    static constexpr std::array<Metric, 5> kMetric{Metric::EQhat, Metric::EQdct, Metric::ELambda,
                                                   Metric::ER, Metric::ER};
    static constexpr std::array<double, 3> kFirstOrderH{0.2, 0.45, 0.8};
    static constexpr std::array<double, 3> kSecondOrderH{1.2, 1.45, 1.8};

    const auto artifact = static_cast<Artifact>(table_id - 1);
    const Metric metric = kMetric[static_cast<std::size_t>(table_id - 1)];
    const int order = table_id == 5 ? 2 : 1;
    const auto& hs = table_id == 5 ? kSecondOrderH : kFirstOrderH;

    std::vector<ErrorRow> rows;
    rows.reserve((kMaxWindow - kMinWindow + 1) * hs.size() * kTableTimes.size());
    for (int window = kMinWindow; window <= kMaxWindow; ++window) {
        for (double h : hs) {
            for (int n : kTableTimes) {
                rows.push_back(make_row(artifact, metric, window, n, h, order));
            }
        }
    }
    return rows;
}

std::vector<ErrorRow> run_figure(int figure_id) {
    if (figure_id < 1 || figure_id > 5) {
        throw DomainError("run_figure: figure id must be in 1..5");
    }
    const auto artifact = static_cast<Artifact>(static_cast<int>(Artifact::Fig1) + figure_id - 1);
    std::vector<ErrorRow> rows;

    if (figure_id == 1) {
        constexpr int kWindow = 5;
        for (int n : kFigureTimes) {
            for (int k = 1; k <= 19; ++k) {
                rows.push_back(make_row(artifact, Metric::ER, kWindow, n, k / 20.0, 1));
            }
        }
        return rows;
    }

    static constexpr std::array<double, 4> kHurst{0.45, 0.8, 1.2, 1.55};
    const double h = kHurst[static_cast<std::size_t>(figure_id - 2)];
    const int order = figure_id <= 3 ? 1 : 2;
    for (int window = kMinWindow; window <= kMaxWindow; ++window) {
        for (int n : kFigureTimes) {
            rows.push_back(make_row(artifact, Metric::ER, window, n, h, order));
        }
    }
    return rows;
}

} // namespace dfbm
