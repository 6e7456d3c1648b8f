#pragma once

#include <compare>
#include <cstdint>

namespace schubert {

/// One box of a Young or skew diagram, in matrix coordinates:
/// row grows downward, col grows rightward, both 0-based.
struct Cell {
    std::int64_t row{0};
    std::int64_t col{0};

    friend auto operator<=>(const Cell&, const Cell&) = default;

    /// Content diagonal.  Cells with equal col - row lie on one
    /// anti-diagonal running NE; components of a skew shape are the
    /// maximal bands of consecutive occupied diagonals.
    std::int64_t diagonal() const { return col - row; }
};

} // namespace schubert
