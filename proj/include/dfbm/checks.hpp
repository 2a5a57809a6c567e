#pragma once

#include <string>
#include <vector>

namespace dfbm {

struct CheckResult {
    std::string name;
    bool passed;
    double worst;     ///< worst observed value of the checked quantity
    double threshold; ///< pass limit for `worst`
};

/// Evaluates the library's structural invariants over their standard grids.
std::vector<CheckResult> run_checks();

} // namespace dfbm
