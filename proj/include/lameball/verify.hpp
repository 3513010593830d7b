#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lameball {

struct CheckResult {
    std::string name;
    double measured = 0.0;   // worst observed error
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

enum class VerifyLevel { Quick, Full };

/// Runs the cross-module invariant checks.  Quick uses reduced problem
/// sizes; Full runs the complete oracle-equivalence and residual sweeps.
/// Deterministic: all random draws come from a fixed seed.
std::vector<CheckResult> run_verification(VerifyLevel level);

/// One line per check: "[PASS|FAIL] name  measured=...  tol=...  (t s)".
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace lameball
