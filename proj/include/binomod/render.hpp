#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "binomod/binom.hpp"

namespace binomod {

/// Residue-indexed palette: 0 is white, nonzero residues sweep a fixed
/// blue-to-red ramp so adjacent residues stay distinguishable.
inline std::array<std::uint8_t, 3> residue_color(i64 residue, i64 p) {
    if (residue == 0) return {255, 255, 255};
    const i64 t = (p == 1) ? 0 : 255 * (residue - 1) / p;
    return {static_cast<std::uint8_t>(40 + t * 200 / 255),
            static_cast<std::uint8_t>(40),
            static_cast<std::uint8_t>(240 - t * 200 / 255)};
}

/// Binary P6 pixmap of Pascal's triangle mod p under a sign convention,
/// one scale x scale block per entry. Width = (k_max+1) * scale.
inline void render_triangle(std::ostream& out, const PrimeModulus& pm, i64 k_max,
                            SignConvention conv, i64 scale) {
    if (k_max < 0 || scale < 1) throw std::invalid_argument("render_triangle: bad dimensions");
    const i64 w = k_max + 1;
    out << "P6\n" << w * scale << ' ' << w * scale << "\n255\n";
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(w));
    for (i64 k = 0; k <= k_max; ++k) rows.push_back(residue_row(k, pm, conv).values);
    const std::array<std::uint8_t, 3> bg{220, 220, 220};
    for (i64 k = 0; k <= k_max; ++k)
        for (i64 sy = 0; sy < scale; ++sy) {
            std::vector<std::uint8_t> line;
            line.reserve(static_cast<std::size_t>(3 * w * scale));
            for (i64 i = 0; i < w; ++i) {
                const auto px = (i <= k)
                                    ? residue_color(rows[static_cast<std::size_t>(k)]
                                                        [static_cast<std::size_t>(i)],
                                                    pm.value())
                                    : bg;
                for (i64 sx = 0; sx < scale; ++sx)
                    line.insert(line.end(), px.begin(), px.end());
            }
            out.write(reinterpret_cast<const char*>(line.data()),
                      static_cast<std::streamsize>(line.size()));
        }
}

}  // namespace binomod
