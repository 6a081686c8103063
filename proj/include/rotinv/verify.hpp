#pragma once

#include "rotinv/invariant.hpp"

#include <string>
#include <vector>

namespace rotinv {

struct CheckResult {
    std::string spec;    // invariant or table label, or "-" for global checks
    std::string suite;   // laplace|oracle|recursion|golden|symmetry
    std::string status;  // pass|fail|waived
    std::string detail;
};

struct VerifyOptions {
    long max_l = 4;
    std::string suite = "all";  // all|laplace|oracle|recursion|golden|symmetry
    double rotation_tol = 1e-10;
    int rotations = 20;
    unsigned long seed = 20250810;
};

// Canonical triangle-valid labels j <= k <= l <= max_l, both parities.
std::vector<InvariantSpec> canonical_specs(long max_l);

// Runs the requested suites; throws std::invalid_argument on an unknown suite.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rotinv
