#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfbm/fbm_model.hpp"
#include "dfbm/linalg.hpp"

namespace dfbm {

enum class Artifact { Table1, Table2, Table3, Table4, Table5, Fig1, Fig2, Fig3, Fig4, Fig5 };

enum class Metric { EQhat, EQdct, ELambda, ER };

std::string_view to_string(Artifact a);
std::string_view to_string(Metric m);
/// Inverse of to_string; throws DomainError on an unknown name.
Artifact parse_artifact(std::string_view s);
Metric parse_metric(std::string_view s);

/// One reported cell: a percentage error for a given (M, n, H, order).
struct ErrorRow {
    Artifact artifact;
    int M;
    int n;
    double H;
    int order;
    Metric metric;
    double value_pct;

    bool operator==(const ErrorRow&) const = default;
};

/// DCT congruence of R and the DCT-diagonal approximation it induces.
struct AlgorithmAResult {
    SymMatrix covariance; ///< R
    Matrix congruence;    ///< D_Q = Q_DCTᵀ R Q_DCT
    Vector lambda_tilde;  ///< diag(D_Q), in DCT column order
    SymMatrix r_tilde;    ///< Q_DCT diag(lambda_tilde) Q_DCTᵀ
};

AlgorithmAResult algorithm_a(const CovSpec& spec);

/// 100 · ‖R - R̃‖_F / ‖R‖_F.
double e_tilde_r(const CovSpec& spec);

/// 100 · ‖Λ - Λ̃‖ / ‖Λ‖ with both eigenvalue lists sorted ascending.
double e_tilde_lambda(const CovSpec& spec);

enum class BasisReference { Dct, QHat };

/// 100 · ‖Q - align(Q, Q_ref)‖_F / √M, Q the exact eigenbasis of R. Order 1 only.
double e_q(const CovSpec& spec, BasisReference reference);

/// Full grid of a table (1..5), rows in M-ascending then printed-column order.
std::vector<ErrorRow> run_table(int table_id);

/// Figure data (1..5); every row carries metric e_R.
std::vector<ErrorRow> run_figure(int figure_id);

} // namespace dfbm
