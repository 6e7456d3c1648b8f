#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "skew_shape.hpp"

namespace schubert {

/// All partitions fitting in the box, binomial(rows+cols, rows) of them,
/// in colexicographic order: sorted by last part, then next-to-last, and
/// so on.  The empty partition comes first, the full box last.
inline std::vector<Partition> partitions_in_box(BoxFrame box) {
    if (box.rows < 0 || box.cols < 0)
        throw std::invalid_argument("partitions_in_box: box sides must be nonnegative");
    std::vector<Partition> out;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(box.rows), 0);
    // odometer over weakly decreasing part vectors, last coordinate fastest
    auto emit = [&] { out.push_back(Partition(parts)); };
    if (box.rows == 0) {
        out.push_back({});
        return out;
    }
    auto step = [&]() -> bool {
        // first part varies fastest; rows above a carry drop to the new
        // value, the least vector consistent with weak decrease
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < box.cols) {
                ++parts[i];
                for (std::size_t j = 0; j < i; ++j) parts[j] = parts[i];
                return true;
            }
        }
        return false;
    };
    emit();
    while (step()) emit();
    return out;
}

/// Hard ceiling for skew shape enumeration; the universe grows fast enough
/// that anything past this needs a deliberate caller override.
inline constexpr std::int64_t kSkewCellDefaultLimit = 10;

/// Every skew shape with exactly n cells, up to translation, sorted.  The
/// universe is differences of partition pairs inside the n x n box, which
/// is exhaustive: any shape with n cells spans at most n rows and n
/// columns.  connected_only keeps the diagonally connected ones.
inline std::vector<SkewShape> skew_shapes_with_cells(std::int64_t n, bool connected_only = false,
                                                     std::int64_t limit = kSkewCellDefaultLimit) {
    if (n < 0) throw std::invalid_argument("skew_shapes_with_cells: negative cell count");
    if (n > limit)
        throw ResourceLimit("skew_shapes_with_cells: " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(limit) + " cells");
    std::set<SkewShape> seen;
    if (n == 0) {
        seen.insert(SkewShape{});
    } else {
        // For each outer partition, walk all inner partitions with
        // |outer| - |inner| = n, row by row with a remaining-size budget.
        for (const auto& outer : partitions_in_box({n, n})) {
            const std::int64_t excess = outer.size() - n;
            if (excess < 0) continue;
            std::vector<std::int64_t> inner(outer.length(), 0);
            std::vector<std::int64_t> tail_room(outer.length() + 1, 0);
            for (std::size_t i = outer.length(); i-- > 0;)
                tail_room[i] = tail_room[i + 1] + outer.parts()[i];
            auto rec = [&](auto&& self, std::size_t row, std::int64_t prev, std::int64_t left) -> void {
                if (row == outer.length()) {
                    if (left == 0) {
                        std::vector<Cell> cells;
                        for (std::size_t i = 0; i < outer.length(); ++i)
                            for (std::int64_t j = inner[i]; j < outer.parts()[i]; ++j)
                                cells.push_back({static_cast<std::int64_t>(i), j});
                        seen.insert(SkewShape(std::move(cells)));
                    }
                    return;
                }
                if (left > tail_room[row]) return; // cannot place the rest
                const std::int64_t cap = std::min(prev, outer.parts()[row]);
                for (std::int64_t v = std::min(cap, left); v >= 0; --v) {
                    inner[row] = v;
                    self(self, row + 1, v, left - v);
                }
                inner[row] = 0;
            };
            rec(rec, 0, n, excess);
        }
    }
    std::vector<SkewShape> out;
    for (auto& s : seen)
        if (!connected_only || is_connected(s)) out.push_back(s);
    return out;
}

} // namespace schubert
