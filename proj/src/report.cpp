#include "dfbm/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace dfbm {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

template <typename T>
T parse_number(const std::string& s, const char* what) {
    T value{};
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw DomainError(std::string("read_csv: bad ") + what + " '" + s + "'");
    }
    return value;
}

std::string full_precision(double v) { return fmt::format("{:.17g}", v); }

nlohmann::json matrix_to_json(const Matrix& m) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_value(double v) { return fmt::format("{:.6g}", v); }

void write_csv(std::ostream& out, const std::vector<ErrorRow>& rows) {
    out << kCsvHeader << '\n';
    for (const ErrorRow& r : rows) {
        out << to_string(r.artifact) << ',' << r.M << ',' << r.n << ',' << format_value(r.H) << ','
            << r.order << ',' << to_string(r.metric) << ',' << format_value(r.value_pct) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<ErrorRow>& rows) {
    auto arr = nlohmann::json::array();
    for (const ErrorRow& r : rows) {
        // Values pass through the CSV text form so both outputs carry identical numbers.
        arr.push_back({{"artifact_id", to_string(r.artifact)},
                       {"M", r.M},
                       {"n", r.n},
                       {"H", std::stod(format_value(r.H))},
                       {"order", r.order},
                       {"metric", to_string(r.metric)},
                       {"value_pct", std::stod(format_value(r.value_pct))}});
    }
    out << arr.dump(2) << '\n';
}

std::vector<ErrorRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw DomainError("read_csv: missing or unexpected header");
    }
    std::vector<ErrorRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 7) throw DomainError("read_csv: expected 7 fields in '" + line + "'");
        rows.push_back(ErrorRow{parse_artifact(f[0]), parse_number<int>(f[1], "M"),
                                parse_number<int>(f[2], "n"), parse_number<double>(f[3], "H"),
                                parse_number<int>(f[4], "order"), parse_metric(f[5]),
                                parse_number<double>(f[6], "value_pct")});
    }
    return rows;
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << full_precision(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_json(std::ostream& out, const Matrix& m) {
    out << nlohmann::json{{"rows", matrix_to_json(m)}}.dump(2) << '\n';
}

void write_decomp_csv(std::ostream& out, const SpectralDecomp& d) {
    const Eigen::Index dim = d.eigenvalues.size();
    out << "k,eigenvalue";
    for (Eigen::Index i = 0; i < dim; ++i) out << ",v" << i;
    out << '\n';
    for (Eigen::Index k = 0; k < dim; ++k) {
        out << k << ',' << full_precision(d.eigenvalues(k));
        for (Eigen::Index i = 0; i < dim; ++i) out << ',' << full_precision(d.eigenvectors(i, k));
        out << '\n';
    }
}

void write_decomp_json(std::ostream& out, const SpectralDecomp& d) {
    std::vector<double> values(d.eigenvalues.begin(), d.eigenvalues.end());
    // Eigenvectors are stored one per entry (the columns of the decomposition).
    const Matrix columns = d.eigenvectors.transpose();
    out << nlohmann::json{{"eigenvalues", values}, {"eigenvectors", matrix_to_json(columns)}}.dump(2)
        << '\n';
}

} // namespace dfbm
