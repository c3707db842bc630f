#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace besselbounds::cli {

// Empty cell, number, integer or raw text.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

// 17 significant digits: round-trips every double and is byte-stable.
std::string format_real(double value);

// One comma-separated line with trailing newline. Non-finite reals are
// written as empty cells.
std::string csv_row(const std::vector<Cell>& cells);

std::string csv_header(const std::vector<std::string>& names);

}  // namespace besselbounds::cli
