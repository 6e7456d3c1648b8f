#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cell.hpp"
#include "partition.hpp"

namespace schubert {

namespace detail {

struct RowSpan {
    std::int64_t row;
    std::int64_t left;   // first column
    std::int64_t right;  // one past last column
};

/// Collapses a sorted, deduplicated cell list to per-row spans, or returns
/// false if some row is not contiguous.
inline bool row_spans(const std::vector<Cell>& cells, std::vector<RowSpan>& spans) {
    spans.clear();
    std::size_t i = 0;
    while (i < cells.size()) {
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1].row == cells[i].row) ++j;
        if (cells[j].col - cells[i].col != static_cast<std::int64_t>(j - i)) return false;
        spans.push_back({cells[i].row, cells[i].col, cells[j].col + 1});
        i = j + 1;
    }
    return true;
}

} // namespace detail

/// True when the cell set is a skew diagram nu/lambda for some partition
/// pair, position-free.  Characterization on the nonempty rows, scanned
/// top to bottom: each row is one contiguous interval, left and right
/// endpoints are both weakly decreasing, and whenever rows are skipped the
/// lower interval must end at or before the upper one starts (that is the
/// column-contiguity condition across the gap).
inline bool is_skew(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<detail::RowSpan> spans;
    if (!detail::row_spans(cells, spans)) return false;
    for (std::size_t s = 1; s < spans.size(); ++s) {
        const auto& up = spans[s - 1];
        const auto& dn = spans[s];
        if (dn.row == up.row + 1) {
            if (dn.left > up.left || dn.right > up.right) return false;
        } else {
            if (dn.right > up.left) return false;
        }
    }
    return true;
}

/// A skew Young diagram stored as its normalized cell set: sorted
/// row-major, translated so the minimal occupied row and column are both
/// zero.  Two shapes compare equal exactly when they are translates of one
/// another.  Rows inside the bounding range may be empty.
class SkewShape {
public:
    SkewShape() = default;

    /// Validates skewness; duplicates collapse, any translate is accepted.
    explicit SkewShape(std::vector<Cell> cells) : cells_(std::move(cells)) {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
        if (!is_skew(cells_))
            throw std::invalid_argument("SkewShape: cell set is not a skew diagram");
        if (!cells_.empty()) {
            std::int64_t min_row = cells_.front().row;
            std::int64_t min_col = cells_.front().col;
            for (const auto& c : cells_) min_col = std::min(min_col, c.col);
            for (auto& c : cells_) {
                c.row -= min_row;
                c.col -= min_col;
            }
        }
    }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    std::vector<Cell> cells_;
};

/// Cells of nu with the cells of lambda removed.  lambda must be contained
/// in nu.  The result forgets the pair: any (lambda, nu) with the same
/// difference, up to translation, produces an equal SkewShape.
inline SkewShape from_partitions(const Partition& inner, const Partition& outer) {
    if (!contains(outer, inner))
        throw std::domain_error("from_partitions: inner partition not contained in outer");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < outer.length(); ++i)
        for (std::int64_t j = inner.part(i); j < outer.parts()[i]; ++j)
            cells.push_back({static_cast<std::int64_t>(i), j});
    return SkewShape(std::move(cells));
}

inline SkewShape transpose(const SkewShape& s) {
    std::vector<Cell> cells;
    cells.reserve(s.size());
    for (const auto& c : s.cells()) cells.push_back({c.col, c.row});
    return SkewShape(std::move(cells));
}

inline SkewShape rotate180(const SkewShape& s) {
    std::vector<Cell> cells;
    cells.reserve(s.size());
    for (const auto& c : s.cells()) cells.push_back({-c.row, -c.col});
    return SkewShape(std::move(cells));
}

/// Splits along empty anti-diagonals: cells on consecutive occupied values
/// of col - row belong to one component.  Components are returned SW to NE
/// (increasing diagonal), each renormalized.  This is the component notion
/// under which a skew shape decomposes into independent poset factors.
inline std::vector<SkewShape> components(const SkewShape& s) {
    if (s.empty()) return {};
    std::map<std::int64_t, std::vector<Cell>> by_diagonal;
    for (const auto& c : s.cells()) by_diagonal[c.diagonal()].push_back(c);
    std::vector<SkewShape> out;
    std::vector<Cell> current;
    std::int64_t prev = 0;
    bool first = true;
    for (auto& [d, cells] : by_diagonal) {
        if (!first && d != prev + 1) {
            out.emplace_back(std::move(current));
            current.clear();
        }
        current.insert(current.end(), cells.begin(), cells.end());
        prev = d;
        first = false;
    }
    out.emplace_back(std::move(current));
    return out;
}

/// At most one diagonal component; the empty shape counts as connected.
inline bool is_connected(const SkewShape& s) {
    return components(s).size() <= 1;
}

/// Per-row column intervals [left, right) covering rows 0..max_row.  Rows
/// that carry no cells get the degenerate interval [v, v) where v is the
/// right endpoint of the next nonempty row below; the intervals then read
/// off a generating partition pair directly.
inline std::vector<std::array<std::int64_t, 2>> row_intervals(const SkewShape& s) {
    if (s.empty()) return {};
    std::vector<detail::RowSpan> spans;
    detail::row_spans(s.cells(), spans); // valid by construction
    const auto max_row = s.cells().back().row;
    std::vector<std::array<std::int64_t, 2>> out(static_cast<std::size_t>(max_row) + 1);
    std::size_t span_idx = spans.size();
    std::int64_t filler = 0;
    for (std::int64_t row = max_row; row >= 0; --row) {
        if (span_idx > 0 && spans[span_idx - 1].row == row) {
            --span_idx;
            out[static_cast<std::size_t>(row)] = {spans[span_idx].left, spans[span_idx].right};
            filler = spans[span_idx].right;
        } else {
            out[static_cast<std::size_t>(row)] = {filler, filler};
        }
    }
    return out;
}

/// Canonical generating pair: the componentwise smallest (inner, outer)
/// whose difference is this shape in normalized position.
inline std::pair<Partition, Partition> generating_pair(const SkewShape& s) {
    const auto intervals = row_intervals(s);
    std::vector<std::int64_t> inner, outer;
    for (const auto& iv : intervals) {
        inner.push_back(iv[0]);
        outer.push_back(iv[1]);
    }
    return {Partition(std::move(inner)), Partition(std::move(outer))};
}

/// Text form "outer / inner", e.g. "2,2 / 1"; the empty shape is "0 / 0".
/// Round-trips through parse_skew.
inline std::string to_text(const SkewShape& s) {
    const auto [inner, outer] = generating_pair(s);
    return to_text(outer) + " / " + to_text(inner);
}

/// Accepts "outer / inner" or a bare "outer" (inner empty).  Both sides
/// use the partition grammar.
inline SkewShape parse_skew(std::string_view text) {
    const auto slash = text.find('/');
    if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("skew parse error: more than one '/'");
    const auto outer_text = text.substr(0, slash);
    Partition outer = parse_partition(outer_text);
    Partition inner;
    if (slash != std::string_view::npos)
        inner = parse_partition(text.substr(slash + 1));
    return from_partitions(inner, outer);
}

} // namespace schubert
