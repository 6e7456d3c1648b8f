#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cell.hpp"
#include "count.hpp"

namespace schubert {

/// The ambient rows x cols rectangle a partition is confined to when an
/// operation depends on the surrounding Grassmannian, e.g. box duals.
struct BoxFrame {
    std::int64_t rows{0};
    std::int64_t cols{0};
};

/// An integer partition in canonical form: weakly decreasing positive
/// parts, no trailing zeros.  The empty partition is default constructed.
class Partition {
public:
    Partition() = default;

    /// Accepts parts with zeros mixed in (they are stripped) but requires
    /// the weakly decreasing order including those zeros, so (3,0,1) is
    /// rejected rather than silently reordered.
    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based, 0 beyond the last row.  Out-of-range reads are
    /// the common case in componentwise formulas, so no throw here.
    std::int64_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::int64_t size() const {
        std::int64_t s = 0;
        for (auto p : parts_) s += p;
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Grammar: part ("," part)*, part := int | int "^" int, where the caret
/// repeats a value.  "0" (or any all-zero form) denotes the empty
/// partition.  The expanded sequence must be weakly decreasing.
inline Partition parse_partition(std::string_view text) {
    std::vector<std::int64_t> parts;
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("partition parse error at position " +
                                    std::to_string(i) + ": " + msg);
    };
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> std::int64_t {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected a nonnegative integer");
        if (i - start > 15) fail("part value too large");
        std::int64_t v = 0;
        for (std::size_t j = start; j < i; ++j) v = v * 10 + (text[j] - '0');
        return v;
    };

    skip_ws();
    if (i == text.size()) fail("empty input (the empty partition is written \"0\")");
    while (true) {
        std::int64_t value = read_int();
        std::int64_t repeat = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            repeat = read_int();
            if (repeat == 0) fail("repetition count must be positive");
            if (repeat > 100000) fail("repetition count too large");
            skip_ws();
        }
        for (std::int64_t r = 0; r < repeat; ++r) parts.push_back(value);
        if (parts.size() > 1000000) fail("too many parts");
        if (i == text.size()) break;
        if (text[i] != ',') fail("expected ',' or end of input");
        ++i;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return {}; // unreachable
}

/// Canonical text form: comma-joined parts, "0" for the empty partition.
/// Round-trips through parse_partition.
inline std::string to_text(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

/// Conjugate diagram: row lengths become column heights.
inline Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<std::int64_t> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::int64_t j = 0; j < p.parts()[i]; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// Diagram containment: inner fits inside outer row by row.
inline bool contains(const Partition& outer, const Partition& inner) {
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts()[i] > outer.part(i)) return false;
    return true;
}

/// Meet in the containment lattice: componentwise minimum.
inline Partition intersect(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> parts;
    std::size_t n = std::min(a.length(), b.length());
    parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) parts.push_back(std::min(a.parts()[i], b.parts()[i]));
    return Partition(std::move(parts));
}

/// Join in the containment lattice: componentwise maximum.
inline Partition unite(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> parts;
    std::size_t n = std::max(a.length(), b.length());
    parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) parts.push_back(std::max(a.part(i), b.part(i)));
    return Partition(std::move(parts));
}

/// One maximal run of equal parts: `height` rows of length `width`.
struct RectangleBlock {
    std::int64_t width{0};
    std::int64_t height{0};
    friend auto operator<=>(const RectangleBlock&, const RectangleBlock&) = default;
};

/// Run-length view (a_1^{b_1}, ..., a_r^{b_r}) with a_1 > ... > a_r > 0.
/// blocks.size() is the rectangle count r that controls smoothness.
struct RectangleDecomposition {
    std::vector<RectangleBlock> blocks;

    std::size_t rectangle_count() const { return blocks.size(); }

    Partition expand() const {
        std::vector<std::int64_t> parts;
        for (const auto& b : blocks)
            for (std::int64_t i = 0; i < b.height; ++i) parts.push_back(b.width);
        return Partition(std::move(parts));
    }
};

inline RectangleDecomposition rect_decomposition(const Partition& p) {
    RectangleDecomposition rd;
    for (auto v : p.parts()) {
        if (!rd.blocks.empty() && rd.blocks.back().width == v)
            ++rd.blocks.back().height;
        else
            rd.blocks.push_back({v, 1});
    }
    return rd;
}

/// Complement rotated by a half turn inside the given box:
/// row i of the result is cols - p[rows-1-i].  Involutive for a fixed box.
inline Partition dual_in_box(const Partition& p, BoxFrame box) {
    if (box.rows < 0 || box.cols < 0)
        throw std::invalid_argument("dual_in_box: box sides must be nonnegative");
    if (static_cast<std::int64_t>(p.length()) > box.rows || p.part(0) > box.cols)
        throw std::domain_error("dual_in_box: partition does not fit in the box");
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(box.rows));
    for (std::int64_t i = 0; i < box.rows; ++i)
        parts.push_back(box.cols - p.part(static_cast<std::size_t>(box.rows - 1 - i)));
    return Partition(std::move(parts));
}

/// Length of the longest hook inside the diagram: first row plus first
/// column minus their shared corner.  Undefined on the empty diagram.
inline std::int64_t xi(const Partition& p) {
    if (p.empty()) throw std::domain_error("xi: the empty diagram has no hook");
    return p.part(0) + static_cast<std::int64_t>(p.length()) - 1;
}

/// Cells of the Young diagram in row-major order.
inline std::vector<Cell> diagram_cells(const Partition& p) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(p.size()));
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::int64_t j = 0; j < p.parts()[i]; ++j)
            cells.push_back({static_cast<std::int64_t>(i), j});
    return cells;
}

/// counts[s] = number of subdiagrams (partitions contained in p) of size s,
/// for s = 0..|p|.  These are the Betti numbers of the matching Schubert
/// variety, whence counts[0] = counts[|p|] = 1 for nonempty p.
///
/// Row-by-row DP over pairs (last part value v, accumulated size s); the
/// weakly-decreasing constraint enters through a suffix sum over v.  The
/// table is (p_1 + 1) x (|p| + 1), small at every scale this library runs.
inline std::vector<Count> subdiagram_counts(const Partition& p) {
    if (p.empty()) return {Count(1)};
    const auto width = static_cast<std::size_t>(p.part(0));
    const auto total = static_cast<std::size_t>(p.size());
    // dp[v][s]: subdiagrams of the first rows processed so far whose last
    // row is exactly v and whose size is s.
    std::vector<std::vector<Count>> dp(width + 1, std::vector<Count>(total + 1));
    for (std::size_t v = 0; v <= static_cast<std::size_t>(p.parts()[0]); ++v)
        dp[v][v] = Count(1);
    std::vector<std::vector<Count>> suffix(width + 2, std::vector<Count>(total + 1));
    for (std::size_t row = 1; row < p.length(); ++row) {
        const auto cap = static_cast<std::size_t>(p.parts()[row]);
        for (std::size_t s = 0; s <= total; ++s) suffix[width + 1][s] = Count(0);
        for (std::size_t v = width + 1; v-- > 0;)
            for (std::size_t s = 0; s <= total; ++s)
                suffix[v][s] = suffix[v + 1][s] + dp[v][s];
        for (auto& col : dp) std::fill(col.begin(), col.end(), Count(0));
        for (std::size_t v = 0; v <= cap; ++v)
            for (std::size_t s = v; s <= total; ++s)
                dp[v][s] = suffix[v][s - v];
    }
    std::vector<Count> counts(total + 1);
    for (std::size_t v = 0; v <= width; ++v)
        for (std::size_t s = 0; s <= total; ++s)
            counts[s] += dp[v][s];
    return counts;
}

} // namespace schubert
