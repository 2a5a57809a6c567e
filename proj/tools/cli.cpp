#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "dfbm/checks.hpp"
#include "dfbm/experiments.hpp"
#include "dfbm/fbm_model.hpp"
#include "dfbm/perturbation.hpp"
#include "dfbm/report.hpp"

namespace dfbm::cli {

namespace {

constexpr int kComputationError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { Matrix, Eig, Errors, Table, Figure, Check };

struct CliConfig {
    Command command = Command::Check;
    int n = 0;
    int M = 0;
    double H = 0.0;
    std::optional<int> order;
    double alpha = 0.01;
    int id = 0;
    std::string format = "csv";
    std::string out = "-";
    bool approx = false;
};

CovSpec make_spec(const CliConfig& cfg) {
    // Without --order the order follows from H: m - 1 < H < m.
    const int order = cfg.order ? *cfg.order : static_cast<int>(std::floor(cfg.H)) + 1;
    try {
        return CovSpec(cfg.n, cfg.M, HurstParams(cfg.H, order));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::vector<ErrorRow> error_rows(const CovSpec& spec) {
    const int order = spec.hurst.order();
    auto row = [&](Artifact a, Metric m, double v) {
        return ErrorRow{a, spec.M, spec.n, spec.hurst.hurst(), order, m, v};
    };
    if (order == 2) return {row(Artifact::Table5, Metric::ER, e_tilde_r(spec))};
    if (order != 1) throw UnsupportedOrderError("errors: order must be 1 or 2");
    return {
        row(Artifact::Table1, Metric::EQhat, e_q(spec, BasisReference::QHat)),
        row(Artifact::Table2, Metric::EQdct, e_q(spec, BasisReference::Dct)),
        row(Artifact::Table3, Metric::ELambda, e_tilde_lambda(spec)),
        row(Artifact::Table4, Metric::ER, e_tilde_r(spec)),
    };
}

void note_errors_context(const CliConfig& cfg, const CovSpec& spec, std::ostream& err) {
    const double chain = sigma_h_sq(spec.hurst, SigmaConvention::Chain);
    const double gamma = sigma_h_sq(spec.hurst, SigmaConvention::Gamma);
    fmt::print(err, "sigma^2: chain {:.10g}, gamma {:.10g}\n", chain, gamma);
    if (spec.hurst.order() == 1) {
        const double h = spec.hurst.hurst();
        const MajorEigenvector major = phi_major(spec.n, spec.M, h);
        fmt::print(err, "major eigenvector: first-order gap {:.6g}, closed-form scale {:.10g}\n",
                   major.closed_form_gap, major.closed_form_scale);
        fmt::print(err, "n_min(alpha = {:g}) = {}\n", cfg.alpha, n_min(spec.M, h, cfg.alpha));
    }
}

void write_checks(std::ostream& out, const std::vector<CheckResult>& results, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const CheckResult& r : results) {
            arr.push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"worst", r.worst},
                           {"threshold", r.threshold}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    for (const CheckResult& r : results) {
        fmt::print(out, "{} {} (worst {:.3g}, limit {:.3g})\n", r.passed ? "PASS" : "FAIL", r.name,
                   r.worst, r.threshold);
    }
}

int execute(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const bool json = cfg.format == "json";
    switch (cfg.command) {
    case Command::Matrix: {
        const CovSpec spec = make_spec(cfg);
        const SymMatrix m = cfg.approx ? covariance_hat(spec) : covariance_matrix(spec);
        json ? write_matrix_json(out, m.matrix()) : write_matrix_csv(out, m.matrix());
        return 0;
    }
    case Command::Eig: {
        const SpectralDecomp d = sym_eig(covariance_matrix(make_spec(cfg)));
        json ? write_decomp_json(out, d) : write_decomp_csv(out, d);
        return 0;
    }
    case Command::Errors: {
        const CovSpec spec = make_spec(cfg);
        const std::vector<ErrorRow> rows = error_rows(spec);
        note_errors_context(cfg, spec, err);
        json ? write_json(out, rows) : write_csv(out, rows);
        return 0;
    }
    case Command::Table:
    case Command::Figure: {
        const std::vector<ErrorRow> rows =
            cfg.command == Command::Table ? run_table(cfg.id) : run_figure(cfg.id);
        json ? write_json(out, rows) : write_csv(out, rows);
        return 0;
    }
    case Command::Check: {
        const std::vector<CheckResult> results = run_checks();
        write_checks(out, results, json);
        for (const CheckResult& r : results) {
            if (!r.passed) return kComputationError;
        }
        return 0;
    }
    }
    return kComputationError;
}

void add_spec_options(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--n", cfg.n, "window start (time index)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--M", cfg.M, "window length")->required()->check(CLI::Range(2, 1 << 16));
    sub->add_option("--H", cfg.H, "Hurst exponent")->required();
    sub->add_option("--order", cfg.order, "process order m (default: floor(H) + 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--alpha", cfg.alpha, "approximation tolerance for n_min")
        ->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output path, '-' for standard output");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Covariance, eigenstructure and DCT error tool for discrete fractional Brownian motion",
                 "dfbm"};
    app.require_subcommand(1);

    auto* matrix = app.add_subcommand("matrix", "print the covariance matrix R (or its approximation)");
    add_spec_options(matrix, cfg);
    add_output_options(matrix, cfg);
    matrix->add_flag("--approx", cfg.approx, "print the structural approximation instead of R");

    auto* eig = app.add_subcommand("eig", "print the eigendecomposition of R");
    add_spec_options(eig, cfg);
    add_output_options(eig, cfg);

    auto* errors = app.add_subcommand("errors", "print the error metrics for one window");
    add_spec_options(errors, cfg);
    add_output_options(errors, cfg);

    auto* table = app.add_subcommand("table", "emit a full error table");
    table->add_option("--id", cfg.id, "table number")->required()->check(CLI::Range(1, 5));
    add_output_options(table, cfg);

    auto* figure = app.add_subcommand("figure", "emit figure data");
    figure->add_option("--id", cfg.id, "figure number")->required()->check(CLI::Range(1, 5));
    add_output_options(figure, cfg);

    auto* check = app.add_subcommand("check", "run the invariant suite");
    add_output_options(check, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    if (*matrix) cfg.command = Command::Matrix;
    else if (*eig) cfg.command = Command::Eig;
    else if (*errors) cfg.command = Command::Errors;
    else if (*table) cfg.command = Command::Table;
    else if (*figure) cfg.command = Command::Figure;
    else cfg.command = Command::Check;

    std::ofstream file;
    std::ostream* sink = &out;
    if (cfg.out != "-") {
        file.open(cfg.out, std::ios::binary);
        if (!file) {
            fmt::print(err, "error: cannot open '{}' for writing\n", cfg.out);
            return kComputationError;
        }
        sink = &file;
    }

    try {
        return execute(cfg, *sink, err);
    } catch (const UsageError& e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kComputationError;
    }
}

} // namespace dfbm::cli
