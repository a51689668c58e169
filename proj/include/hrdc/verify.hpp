#pragma once

#include <string>
#include <vector>

namespace hrdc {

struct SuiteResult {
    std::string suite;
    int checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

std::vector<std::string> verify_suite_names();

/// Runs one of the built-in verification suites: "identities" (the exact identity checks over
/// n <= 6, q in {2,3,4,5}), "constructions" (sizes, distances, additivity, and bound checks
/// over the construction matrix), or "distributions" (duality and closed-form cross-checks).
SuiteResult run_verify_suite(const std::string& name);

}  // namespace hrdc
