#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcalc::verify {

/// One invariant check: worst observed residual against its tolerance.
struct CheckResult {
    std::string key;      ///< e.g. "operators/limit_closed_agreement"
    bool pass = false;
    double max_residual = 0.0;  ///< worst scaled residual / relative error seen
    double tolerance = 0.0;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 987654321;

/// The full limit-vs-closed-form agreement sweep (battery x order grid x t
/// grid), exposed on its own so callers can time it.
CheckResult limit_closed_agreement();

std::vector<CheckResult> operators_suite(std::uint64_t seed = kDefaultSeed);
std::vector<CheckResult> integration_suite(std::uint64_t seed = kDefaultSeed);
std::vector<CheckResult> ode_suite(std::uint64_t seed = kDefaultSeed);
std::vector<CheckResult> theorems_suite(std::uint64_t seed = kDefaultSeed);
std::vector<CheckResult> all_suites(std::uint64_t seed = kDefaultSeed);

}  // namespace mcalc::verify
