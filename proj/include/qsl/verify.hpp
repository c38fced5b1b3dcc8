// verify.hpp — self-contained oracle cross-checks runnable from the CLI:
// quadrature against closed forms, finite-difference generator consistency,
// engine against the model-specific bounds, and the inequality suites.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsl/quadrature.hpp"

namespace qsl {

struct VerifyOptions {
    QuadratureSpec quadrature;
    // Dephasing convention multiplier. Checks anchored to the spectral
    // integral only hold at kappa = 1 and are reported as skipped (with the
    // observed deviation) otherwise.
    double kappa = 1.0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::string note;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

// One line per check; returns true iff nothing failed (skips do not fail).
bool print_verify_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace qsl
