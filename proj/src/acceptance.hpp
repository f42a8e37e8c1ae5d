#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rotconj {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

using CriterionReporter = std::function<void(const CriterionResult&)>;

/// Runs the nine acceptance criteria in order; `report` is called after each.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const CriterionReporter& report = {});

/// Runs a single criterion (1..9).
CriterionResult run_criterion(int id, std::uint64_t seed);

}  // namespace rotconj
