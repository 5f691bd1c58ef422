#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cpar {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyConfig {
    unsigned long long seed = 0;
    int psi_samples = 1000;
};

// Acceptance criteria 1..12.
std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, const VerifyConfig& cfg = {});
std::vector<CriterionResult> run_all(const VerifyConfig& cfg = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace cpar
