#pragma once

#include <string>
#include <vector>

namespace canord {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the eight acceptance criteria. Family checks are spread over `workers`
/// threads (0 picks the hardware concurrency).
std::vector<CriterionResult> run_acceptance(unsigned workers = 0);

/// One line such as "[PASS] 3 McKay count: 43 runs (0.1 s)".
std::string format_result(const CriterionResult& r);

} // namespace canord
