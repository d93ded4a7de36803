#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bijections.hpp"

namespace flawset {

/// Fixed-width drawing, one column per step and one row per unit band.
/// The band between heights y and y+1 holds '/' for U steps starting at y
/// and '\' for D steps ending at y. A rule marks the minimum height and a
/// last line states the flaw level.
///
///   /\/\      y=1
///   ----      y=0  minimum
///   flaw level 0
inline std::string render_path(const FlawPath& p) {
    const auto h = p.heights();
    const int lo = *std::min_element(h.begin(), h.end());
    const int hi = *std::max_element(h.begin(), h.end());
    const std::size_t width = p.steps().size();
    std::vector<std::string> rows(static_cast<std::size_t>(hi - lo), std::string(width, ' '));
    for (std::size_t t = 0; t < width; ++t) {
        const int base = p.steps()[t] == 'U' ? h[t] : h[t + 1];
        rows[static_cast<std::size_t>(hi - 1 - base)][t] = p.steps()[t] == 'U' ? '/' : '\\';
    }
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        out += rows[r] + "  y=" + std::to_string(hi - static_cast<int>(r)) + '\n';
    out += std::string(width, '-') + "  y=" + std::to_string(lo) + "  minimum\n";
    out += "flaw level " + std::to_string(-lo) + '\n';
    return out;
}

} // namespace flawset
