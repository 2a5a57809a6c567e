#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dfbm/experiments.hpp"
#include "dfbm/linalg.hpp"

namespace dfbm {

inline constexpr std::string_view kCsvHeader = "artifact_id,M,n,H,order,metric,value_pct";

/// Percentages and H are printed with 6 significant digits.
std::string format_value(double v);

void write_csv(std::ostream& out, const std::vector<ErrorRow>& rows);
void write_json(std::ostream& out, const std::vector<ErrorRow>& rows);

/// Parses CSV produced by write_csv. Throws DomainError on malformed input.
std::vector<ErrorRow> read_csv(std::istream& in);

/// Matrix rows as comma-separated values at full (round-trip) precision.
void write_matrix_csv(std::ostream& out, const Matrix& m);
void write_matrix_json(std::ostream& out, const Matrix& m);

/// One line per eigenpair: k,eigenvalue,v_0,...,v_{M-1}.
void write_decomp_csv(std::ostream& out, const SpectralDecomp& d);
void write_decomp_json(std::ostream& out, const SpectralDecomp& d);

} // namespace dfbm
