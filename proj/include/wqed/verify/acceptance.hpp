#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wqed::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // measured values against tolerances
    std::vector<std::pair<std::string, double>> measurements;
    double seconds = 0.0;
};

enum class Level { Quick, Full };

inline constexpr int kCriterionCount = 12;

/// Quick covers criteria 1-6.
std::vector<int> criteria_for(Level level);

std::string criterion_title(int id);

/// Runs one criterion. Numerical exceptions are caught and reported as a
/// failure with the message in `detail`.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_suite(Level level);

}  // namespace wqed::verify
