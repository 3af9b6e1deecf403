#pragma once

#include <string>
#include <vector>

namespace pointscat {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst deviation or failure description
};

// The ten headline verification checks (fast, deterministic).
std::vector<CheckResult> run_acceptance_checks();

// Additional cross-module invariants (involutions, covariance, round trips,
// consistency between independent computation routes, sweep determinism).
std::vector<CheckResult> run_invariant_checks();

} // namespace pointscat
