#pragma once

#include "cuspgroup/curve_context.hpp"

#include <string>
#include <vector>

namespace cuspgroup {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Runs every structural identity available for one prime: unit criteria of
/// the bases, both class-number routes, the square relation between the full
/// and rational groups, closed-form orders against the group oracle, and
/// basis-swap invariance. A check that throws is reported as failed.
std::vector<CheckResult> run_invariant_suite(const CurveContext& ctx);

} // namespace cuspgroup
