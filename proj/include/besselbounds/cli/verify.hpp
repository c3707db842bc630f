#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "besselbounds/cli/grid.hpp"

namespace besselbounds::cli {

enum class VerifyPreset {
    Quick,  // coarser Figure 3 grid, Skellam sweep for lambda <= 25
    Full,   // every sweep at full resolution
};

struct VerifyOptions {
    VerifyPreset preset = VerifyPreset::Quick;
    // Relative slack granted to the oracle when testing containment.
    double slack = 1e-9;
    // Test hook: every bound's upper end is multiplied by this factor before
    // the containment check. 1 leaves the bounds untouched.
    double perturb = 1.0;
    // Overrides the nu values of the ratio and H sweeps.
    std::optional<GridSpec> nu_grid;
};

struct Violation {
    std::string check;
    double nu = 0.0;
    double x = 0.0;
    std::string bound_name;
    double bound_value = 0.0;
    double oracle_value = 0.0;
};

struct CheckSummary {
    std::string name;
    std::int64_t points = 0;
    std::int64_t violations = 0;
};

struct SweepReport {
    std::int64_t points_checked = 0;
    std::vector<Violation> violations;
    // Largest relative excursion of an oracle value past a bound end,
    // (oracle - upper) / |oracle| or (lower - oracle) / |oracle|. Negative
    // when every oracle value sits strictly inside its interval.
    double max_relative_slack = 0.0;
    std::vector<CheckSummary> checks;

    bool passed() const { return violations.empty(); }
    std::string to_json() const;
};

// Runs every invariant sweep. Throws UsageError for an empty nu grid.
SweepReport run_verification(const VerifyOptions& options);

}  // namespace besselbounds::cli
