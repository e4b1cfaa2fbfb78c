#pragma once

#include <vector>

#include "wps/rational.hpp"

namespace wps {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination; takes its argument by value.
inline long long matrix_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Rational pivot = m[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / pivot;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[pivot_row][c];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace wps
