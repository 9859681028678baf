#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arcinv {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::vector<std::string> details;
};

struct VerifyOptions {
    std::uint64_t seed = 20240607;
};

/// Runs every acceptance criterion on the built-in datasets. Results are in
/// criterion order and depend only on the seed.
std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions& options = {});

/// Single criterion by number (1-based).
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

int criterion_count();

}  // namespace arcinv
