#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace besselbounds::cli {

// Bad command-line input; maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GridVar { Nu, X };

// Evenly spaced values start, start + step, ..., up to stop inclusive.
// Points are computed as start + i * step, never by accumulation.
struct GridSpec {
    GridVar var = GridVar::Nu;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    double fixed_other = 0.0;

    // Parses "start:stop:step"; throws UsageError on malformed or invalid
    // grids (step <= 0, start > stop, more than 1e7 intervals).
    static GridSpec parse(std::string_view text, GridVar var, double fixed_other);

    void validate() const;
    std::int64_t count() const;
    double at(std::int64_t i) const;
};

inline constexpr double kMaxGridIntervals = 1e7;

}  // namespace besselbounds::cli
