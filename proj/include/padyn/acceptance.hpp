#pragma once

#include <string>
#include <vector>

namespace padyn {

// One verification criterion of the acceptance suite.  Criteria pin their
// own parameters (the canonical set p=3, a=3, b=1/3 and the variant a=9) and
// every tolerance in code.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kNumCriteria = 9;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

// "PASS criterion 3: shift conjugacy — ... (0.42s)"
std::string format_criterion(const CriterionResult& r);

}  // namespace padyn
