#pragma once

#include <stdexcept>
#include <string>

namespace linsyz {

/// A probe whose projected work exceeds the configured budget is refused
/// rather than started; callers can retry with a larger budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized geometric construction failed its validation checks after
/// the allowed number of attempts (typically a section that is degenerate
/// over the chosen prime field).
struct DegenerateSection : std::runtime_error {
    explicit DegenerateSection(const std::string& what) : std::runtime_error(what) {}
};

} // namespace linsyz
