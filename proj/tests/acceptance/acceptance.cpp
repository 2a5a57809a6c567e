// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "dfbm/dct_gmr.hpp"
#include "dfbm/experiments.hpp"
#include "dfbm/fbm_model.hpp"
#include "dfbm/perturbation.hpp"

using namespace dfbm;

namespace {

// Printed tables: rows M = 2..9, columns (n, H) = (200, H1), (2000, H1), (200, H2), ...
using Printed = std::array<std::array<double, 6>, 8>;

constexpr Printed kTable1{{
    {0.0820, 0.0080, 0.1781, 0.0178, 0.3158, 0.0316},
    {0.1940, 0.0713, 0.1234, 0.0126, 0.2112, 0.0211},
    {0.5020, 0.1880, 0.1562, 0.0160, 0.3926, 0.1098},
    {0.5423, 0.2016, 0.3549, 0.0366, 0.4745, 0.1346},
    {0.2767, 0.0988, 0.2086, 0.0214, 0.5372, 0.1515},
    {0.5796, 0.2119, 0.2306, 0.0236, 0.5835, 0.1728},
    {0.2990, 0.2139, 0.2506, 0.0257, 0.8950, 0.1817},
    {0.5980, 0.2150, 0.4926, 0.0509, 0.6557, 0.1754},
}};

constexpr Printed kTable2{{
    {0.0531, 0.0051, 0.1127, 0.0113, 0.1995, 0.0200},
    {0.2727, 0.1007, 0.1662, 0.0170, 0.2825, 0.0283},
    {2.6047, 2.5861, 0.5137, 0.4590, 2.6653, 2.8256},
    {3.4915, 3.4579, 0.6691, 0.6028, 3.4596, 3.6393},
    {4.1735, 4.1326, 0.7930, 0.7166, 4.1227, 4.3194},
    {4.6706, 4.6222, 0.8853, 0.7987, 4.6057, 4.8067},
    {5.0760, 5.0226, 0.9622, 0.8662, 5.0069, 5.2117},
    {5.4022, 5.3444, 1.0253, 0.9204, 5.3307, 5.5360},
}};

constexpr Printed kTable3{{
    {3.8564e-5, 3.6638e-7, 0.0002, 0.0179e-4, 0.0006, 0.0057e-3},
    {0.0015, 0.0002, 0.0005, 0.0519e-4, 0.0015, 0.0151e-3},
    {0.0037, 0.0011, 0.0009, 0.0926e-4, 0.0028, 0.0277e-3},
    {0.0064, 0.0021, 0.0015, 0.1467e-4, 0.0044, 0.0440e-3},
    {0.0086, 0.0029, 0.0022, 0.2130e-4, 0.0064, 0.0639e-3},
    {0.0104, 0.0035, 0.0030, 0.2919e-4, 0.0087, 0.0874e-3},
    {0.0120, 0.0041, 0.0039, 0.3835e-4, 0.0113, 0.1145e-3},
    {0.0134, 0.0046, 0.0050, 0.4879e-4, 0.0143, 0.1454e-3},
}};

constexpr Printed kTable4{{
    {0.0727, 0.0072, 0.1590, 0.0159, 0.2821, 0.0283},
    {0.4610, 0.1732, 0.2720, 0.0279, 0.4596, 0.0462},
    {0.6428, 0.2403, 0.3768, 0.0390, 0.6279, 0.0632},
    {0.7754, 0.2876, 0.4780, 0.0496, 0.7923, 0.0799},
    {0.8837, 0.3251, 0.5773, 0.0600, 0.9546, 0.0965},
    {0.9775, 0.3567, 0.6754, 0.0703, 1.1153, 0.1130},
    {1.0617, 0.3842, 0.7725, 0.0805, 1.2747, 0.1294},
    {1.1391, 0.4090, 0.8689, 0.0906, 1.4331, 0.1458},
}};

constexpr Printed kTable5{{
    {0.4232, 0.0424, 0.5114, 0.0513, 0.6348, 0.0636},
    {0.6894, 0.0692, 0.8330, 0.0837, 1.0340, 0.1039},
    {0.9416, 0.0948, 1.1377, 0.1145, 1.4123, 0.1422},
    {1.1881, 0.1199, 1.4355, 0.1449, 1.7819, 0.1798},
    {1.4312, 0.1447, 1.7292, 0.1749, 2.1463, 0.2171},
    {1.6718, 0.1695, 2.0200, 0.2048, 2.5071, 0.2542},
    {1.9106, 0.1941, 2.3083, 0.2345, 2.8648, 0.2911},
    {2.1476, 0.2187, 2.5947, 0.2642, 3.2200, 0.3280},
}};

constexpr std::array<double, 3> kFirstOrderH{0.2, 0.45, 0.8};

struct Outcome {
    bool pass;
    std::string detail;
};

int g_failures = 0;

void report(const std::string& name, const Outcome& o) {
    if (!o.pass) ++g_failures;
    fmt::print("{} {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
}

double printed_at(const Printed& t, int m, int col) {
    return t[static_cast<std::size_t>(m - 2)][static_cast<std::size_t>(col)];
}

std::string cell(int m, const ErrorRow& r) { return fmt::format("M={} n={} H={}", m, r.n, r.H); }

// Rows come out M-major with the printed column order, so row i is (M = 2 + i/6, column i%6).
struct Worst {
    double rel = 0.0;
    std::string where;
    double got = 0.0;
    double want = 0.0;
};

Worst worst_relative(const std::vector<ErrorRow>& rows, const Printed& t,
                     const std::function<bool(int m)>& include = [](int) { return true; }) {
    Worst w;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int m = rows[i].M;
        if (!include(m)) continue;
        const double want = printed_at(t, m, static_cast<int>(i % 6));
        const double rel = std::abs(rows[i].value_pct - want) / want;
        if (rel >= w.rel) w = Worst{rel, cell(m, rows[i]), rows[i].value_pct, want};
    }
    return w;
}

std::string describe(const Worst& w) {
    return fmt::format("worst {:.2f}% at {} ({:.6g} vs {:.6g})", 100.0 * w.rel, w.where, w.got, w.want);
}

Outcome table_with_floor(const std::vector<ErrorRow>& rows, const Printed& t, double rel_tol,
                         double abs_tol) {
    int misses = 0;
    double worst_ratio = 0.0;
    std::string where;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double want = printed_at(t, rows[i].M, static_cast<int>(i % 6));
        const double tol = std::max(rel_tol * want, abs_tol);
        const double ratio = std::abs(rows[i].value_pct - want) / tol;
        if (ratio > 1.0) ++misses;
        if (ratio >= worst_ratio) {
            worst_ratio = ratio;
            where = fmt::format("{} ({:.6g} vs {:.6g})", cell(rows[i].M, rows[i]), rows[i].value_pct, want);
        }
    }
    return Outcome{misses == 0 && rows.size() == 48,
                   fmt::format("{} cells, {} outside tolerance; worst uses {:.2f} of its tolerance at {}",
                               rows.size(), misses, worst_ratio, where)};
}

double e_r_with(const CovSpec& spec, SigmaConvention conv) {
    const SymMatrix r = covariance_matrix(spec, conv);
    const Matrix q = dct_matrix(spec.M);
    Matrix d = q.transpose() * r.matrix() * q;
    d.diagonal().setZero();
    return 100.0 * d.norm() / frobenius_norm(r);
}

Outcome table5_outcome() {
    Outcome best{false, ""};
    std::string notes;
    for (SigmaConvention conv : {SigmaConvention::Chain, SigmaConvention::Gamma}) {
        std::vector<ErrorRow> rows;
        for (int m = 2; m <= 9; ++m)
            for (double h : {1.2, 1.45, 1.8})
                for (int n : {200, 2000}) {
                    const CovSpec spec(n, m, HurstParams(h, 2));
                    rows.push_back(ErrorRow{Artifact::Table5, m, n, h, 2, Metric::ER, e_r_with(spec, conv)});
                }
        const Outcome o = table_with_floor(rows, kTable5, 0.03, 0.005);
        const char* name = conv == SigmaConvention::Chain ? "chain sigma^2" : "gamma sigma^2";
        notes += fmt::format("[{}: {}] ", name, o.detail);
        if (o.pass && !best.pass) best.pass = true;
    }
    const std::vector<ErrorRow> library = run_table(5);
    const double anchor = library.back().value_pct;
    notes += fmt::format("anchor M=9 n=2000 H=1.8 -> {:.4f}", anchor);
    best.detail = notes;
    return best;
}

Outcome table3_outcome() {
    const Worst w = worst_relative(run_table(3), kTable3);
    return Outcome{w.rel <= 0.15, describe(w)};
}

Outcome table2_outcome() {
    const std::vector<ErrorRow> rows = run_table(2);
    const Worst small = worst_relative(rows, kTable2, [](int m) { return m <= 3; });
    const Worst all = worst_relative(rows, kTable2);
    int pattern_breaks = 0;
    for (std::size_t base = 0; base < rows.size(); base += 6) {
        if (rows[base].M < 4) continue;
        for (int t = 0; t < 2; ++t) {
            const double low = rows[base + 0 + t].value_pct;
            const double mid = rows[base + 2 + t].value_pct;
            const double high = rows[base + 4 + t].value_pct;
            if (!(mid < low && mid < high)) ++pattern_breaks;
        }
    }
    const bool pass = small.rel <= 0.05 && all.rel <= 0.25 && pattern_breaks == 0;
    return Outcome{pass, fmt::format("M<=3 {}; all cells {}; H=0.45 minimum broken in {} (M, n) pairs",
                                     describe(small), describe(all), pattern_breaks)};
}

Outcome table1_outcome() {
    const std::vector<ErrorRow> rows = run_table(1);
    double largest = 0.0;
    for (const ErrorRow& r : rows) largest = std::max(largest, r.value_pct);
    const Worst two = worst_relative(rows, kTable1, [](int m) { return m == 2; });
    const bool pass = largest < 1.0 && two.rel <= 0.10;
    return Outcome{pass, fmt::format("largest cell {:.4f}% (limit 1%); M=2 {}", largest, describe(two))};
}

Outcome exactness_outcome() {
    double approx = 0.0;
    double lambda = 0.0;
    int lambda_at = 0;
    for (int m = 2; m <= 9; ++m) {
        for (int n : {1, 2, 10, 200, 2000})
            approx = std::max(approx, approx_error_hat(CovSpec(n, m, HurstParams(0.5, 1))));
        const double e = e_tilde_lambda(CovSpec(2000, m, HurstParams(0.5, 1)));
        if (e >= lambda) {
            lambda = e;
            lambda_at = m;
        }
    }
    return Outcome{approx <= 1e-10 && lambda < 1e-6,
                   fmt::format("structural error {:.3g}% (limit 1e-10); e_lambda at n=2000 worst {:.3g}% "
                               "at M={} (limit 1e-6%)",
                               approx, lambda, lambda_at)};
}

Outcome precision_outcome() {
    double worst = 0.0;
    for (int n : {1, 2, 10, 200})
        for (int m = 2; m <= 9; ++m) {
            const Matrix prod = precision_half(n, m).matrix() *
                                covariance_matrix(CovSpec(n, m, HurstParams(0.5, 1))).matrix();
            worst = std::max(worst, (prod - Matrix::Identity(m, m)).cwiseAbs().maxCoeff());
        }
    return Outcome{worst <= 1e-8, fmt::format("max |P R - I| = {:.3g} (limit 1e-8)", worst)};
}

Outcome perturbation_outcome() {
    double identities = 0.0;
    double zbz = 0.0;
    double resolvent_gap = 0.0;
    int rank_misses = 0;
    for (int m = 2; m <= 9; ++m) {
        const ComponentSet cs = component_matrices(m);
        const Matrix& z1 = cs.Z10.matrix();
        const Matrix& z2 = cs.Z20.matrix();
        const Matrix id = Matrix::Identity(m, m);
        identities = std::max({identities, (z1 + z2 - id).cwiseAbs().maxCoeff(),
                               (z1 * z2).cwiseAbs().maxCoeff(), (z1 * z1 - z1).cwiseAbs().maxCoeff(),
                               (z2 * z2 - z2).cwiseAbs().maxCoeff()});
        for (const SymMatrix& zr : cs.Z1r) identities = std::max(identities, zr.matrix().cwiseAbs().maxCoeff());
        for (double h : kFirstOrderH) {
            const StructuralSet s = structural_matrices(CovSpec(200, m, HurstParams(h, 1)));
            zbz = std::max(zbz, (z1 * s.B.matrix() * z1).cwiseAbs().maxCoeff());
            if (numeric_rank(reduced_operator(m, h), 1e-10) != m - 1) ++rank_misses;
        }
        for (double z : {-1.0, 1.0, 0.5, m + 1.0}) {
            const Matrix direct = (z * id - Matrix::Ones(m, m)).inverse();
            resolvent_gap =
                std::max(resolvent_gap, (resolvent(z, m).matrix() - direct).norm() / direct.norm());
        }
    }
    const bool pass = identities <= 1e-12 && zbz <= 1e-12 && rank_misses == 0 && resolvent_gap <= 1e-10;
    return Outcome{pass, fmt::format("projector identities {:.3g}; Z10 B Z10 {:.3g}; rank misses {}; "
                                     "resolvent relative gap {:.3g}",
                                     identities, zbz, rank_misses, resolvent_gap)};
}

Outcome eigen_model_outcome() {
    double major = 0.0;
    double minor = 0.0;
    std::string minor_at;
    for (int m : {2, 3, 5})
        for (double h : kFirstOrderH) {
            const Vector actual = sym_eig(covariance_matrix(CovSpec(2000, m, HurstParams(h, 1)))).eigenvalues;
            major = std::max(major, std::abs(lambda_major(2000, m, h) - actual(m - 1)) / actual(m - 1));
            const Vector model = minor_model_eigenvalues(m, h);
            for (int r = 0; r < m - 1; ++r) {
                const double rel = std::abs(model(r) - actual(r)) / actual(r);
                if (rel >= minor) {
                    minor = rel;
                    minor_at = fmt::format("M={} H={} r={}", m, h, r + 1);
                }
            }
        }
    const double oracle = (401.0 + std::sqrt(160001.0)) / 2.0;
    const double closed = std::abs(lambda_major(200, 2, 0.5) - oracle) / oracle;
    const bool pass = major <= 0.01 && minor <= 0.05 && closed <= 1e-9;
    return Outcome{pass, fmt::format("largest eigenvalue worst {:.3g}% (limit 1%); minor eigenvalues worst "
                                     "{:.3g}% at {} (limit 5%); M=2 H=0.5 oracle gap {:.3g}",
                                     100.0 * major, 100.0 * minor, minor_at, closed)};
}

Outcome bound_outcome() {
    double worst = 0.0;
    std::string where;
    for (double alpha : {0.01, 0.05})
        for (int m = 2; m <= 9; ++m)
            for (double h : kFirstOrderH) {
                const int nm = n_min(m, h, alpha);
                for (int n : {nm + 1, 2 * nm + 1, 200, 2000}) {
                    const double ratio = approx_error_hat(CovSpec(n, m, HurstParams(h, 1))) / 100.0 / alpha;
                    if (ratio >= worst) {
                        worst = ratio;
                        where = fmt::format("alpha={} M={} H={} n={}", alpha, m, h, n);
                    }
                }
            }
    return Outcome{worst <= 1.0, fmt::format("worst error/alpha {:.3f} at {}", worst, where)};
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<ErrorRow> table4 = run_table(4);
    const double table4_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome t4 = table_with_floor(table4, kTable4, 0.02, 0.002);
    t4.pass = t4.pass && table4_seconds < 5.0;
    t4.detail += fmt::format("; runtime {:.3f} s (limit 5 s)", table4_seconds);

    report("Table IV reproduction", t4);
    report("Table V reproduction (order 2)", table5_outcome());
    report("Table III reproduction", table3_outcome());
    report("Table II reproduction", table2_outcome());
    report("Table I reproduction", table1_outcome());
    report("Exactness at H = 1/2", exactness_outcome());
    report("Precision identity", precision_outcome());
    report("Perturbation property suite", perturbation_outcome());
    report("Eigen-model accuracy", eigen_model_outcome());
    report("Structural approximation bound", bound_outcome());

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("{} of 10 criteria failed; total runtime {:.3f} s\n", g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
