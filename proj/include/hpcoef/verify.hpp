#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpcoef/search.hpp"

namespace hpcoef {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Effort knobs for the stochastic checks. The full budget is what the
/// acceptance suite runs; the small budget is a faster smoke setting.
struct VerifyBudget {
    int solver_starts = 200;
    int struct_starts = 8;
    SearchSettings struct_settings{20000, 6, 0.35, 1024};
    int poly_starts = 24;
    SearchSettings poly_settings{24000, 6, 0.35, 1024};
    int scan_starts = 6;
    SearchSettings scan_settings{4000, 4, 0.35, 1024};
    std::uint64_t seed = 12345;

    static VerifyBudget full() { return {}; }
    static VerifyBudget small();
};

/// Runs one numbered acceptance criterion (1..13).
CheckResult run_criterion(int criterion, const VerifyBudget& budget);

/// Runs all 13 criteria in order.
std::vector<CheckResult> run_all_criteria(const VerifyBudget& budget);

/// Named groupings used by the CLI: "paper-values" (1, 2, 10, 11),
/// "identities" (3, 5, 6, 8, 9, 12), "oracle" (4, 7, 13), or "all".
std::vector<int> suite_criteria(const std::string& suite);

}  // namespace hpcoef
