#include "besselbounds/cli/grid.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace besselbounds::cli {

namespace {

double parse_number(std::string_view token, std::string_view whole) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw UsageError("invalid grid '" + std::string(whole) + "': expected start:stop:step");
    }
    return value;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text, GridVar var, double fixed_other) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    for (;;) {
        const std::size_t colon = text.find(':', begin);
        parts.push_back(text.substr(begin, colon == std::string_view::npos ? colon : colon - begin));
        if (colon == std::string_view::npos) break;
        begin = colon + 1;
    }
    if (parts.size() != 3) {
        throw UsageError("invalid grid '" + std::string(text) + "': expected start:stop:step");
    }
    GridSpec spec{var, parse_number(parts[0], text), parse_number(parts[1], text),
                  parse_number(parts[2], text), fixed_other};
    spec.validate();
    return spec;
}

void GridSpec::validate() const {
    if (!(step > 0.0)) throw UsageError("grid step must be > 0");
    if (start > stop) throw UsageError("grid is empty: start > stop");
    if ((stop - start) / step > kMaxGridIntervals) {
        throw UsageError("grid too large: more than 1e7 intervals");
    }
}

std::int64_t GridSpec::count() const {
    // The small allowance keeps the endpoint when (stop - start) / step is an
    // integer up to rounding, e.g. 150 / 0.015.
    return static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

double GridSpec::at(std::int64_t i) const {
    return start + static_cast<double>(i) * step;
}

}  // namespace besselbounds::cli
