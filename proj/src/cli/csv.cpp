#include "besselbounds/cli/csv.hpp"

#include <charconv>
#include <cmath>

namespace besselbounds::cli {

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) return {};
    return std::string(buf, ptr);
}

std::string csv_row(const std::vector<Cell>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) line += ',';
        const Cell& c = cells[i];
        if (const auto* d = std::get_if<double>(&c)) {
            if (std::isfinite(*d)) line += format_real(*d);
        } else if (const auto* n = std::get_if<std::int64_t>(&c)) {
            line += std::to_string(*n);
        } else if (const auto* s = std::get_if<std::string>(&c)) {
            line += *s;
        }
    }
    line += '\n';
    return line;
}

std::string csv_header(const std::vector<std::string>& names) {
    std::vector<Cell> cells(names.begin(), names.end());
    return csv_row(cells);
}

}  // namespace besselbounds::cli
