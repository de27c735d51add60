#pragma once

#include <string>
#include <vector>

#include "mubforge/kernels.hpp"

namespace mubforge::checks {

enum class Scale { Small, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

struct CheckReport {
    std::vector<CheckResult> results;
    bool all_pass() const;
    int failures() const;
};

/// Run the full property suite at the requested scale. Small keeps every
/// sweep at d <= 6 / p <= 7 (seconds); Full runs the stated bounds.
/// `inject_fault` perturbs one phase inside the first check, as a negative
/// control that the harness actually fails on wrong values.
CheckReport run_all(Scale scale, double tol = 1e-10, bool inject_fault = false,
                    kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace mubforge::checks
