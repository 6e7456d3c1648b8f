#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cell.hpp"
#include "partition.hpp"

namespace schubert {

/// A Schubert variety is smooth exactly when its partition is a rectangle
/// (at most one block in the run-length decomposition; the empty partition
/// counts as smooth).
inline bool is_smooth(const Partition& p) {
    return rect_decomposition(p).rectangle_count() <= 1;
}

namespace detail {

inline void append_block(std::vector<std::int64_t>& parts, std::int64_t width, std::int64_t height) {
    for (std::int64_t i = 0; i < height; ++i) parts.push_back(width);
}

} // namespace detail

/// The r-1 components of the singular locus of the Schubert variety of p,
/// indexed 1..r-1 to match the inner corners of the diagram, returned in
/// that order.  With p = (a_1^{b_1}, ..., a_r^{b_r}), component i is
///
///   (a_1^{b_1}, ..., a_{i-1}^{b_{i-1}}, a_i^{b_i - 1},
///    (a_{i+1} - 1)^{b_{i+1} + 1}, a_{i+2}^{b_{i+2}}, ..., a_r^{b_r}),
///
/// i.e. p minus the hook through inner corner i.  Smooth p yields the
/// empty list; the empty partition is rejected.
inline std::vector<Partition> singular_components(const Partition& p) {
    if (p.empty()) throw std::domain_error("singular_components: empty partition");
    const auto rd = rect_decomposition(p);
    const std::size_t r = rd.rectangle_count();
    std::vector<Partition> out;
    if (r < 2) return out;
    out.reserve(r - 1);
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<std::int64_t> parts;
        for (std::size_t j = 0; j + 1 <= i - 1; ++j)
            detail::append_block(parts, rd.blocks[j].width, rd.blocks[j].height);
        detail::append_block(parts, rd.blocks[i - 1].width, rd.blocks[i - 1].height - 1);
        detail::append_block(parts, rd.blocks[i].width - 1, rd.blocks[i].height + 1);
        for (std::size_t j = i + 1; j < r; ++j)
            detail::append_block(parts, rd.blocks[j].width, rd.blocks[j].height);
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Common intersection of all singular components, in closed form:
/// (a_1^{b_1 - 1}, (a_2 - 1)^{b_2}, ..., (a_{r-1} - 1)^{b_{r-1}},
///  (a_r - 1)^{b_r + 1}).  Requires r >= 2.
inline Partition singular_intersection(const Partition& p) {
    const auto rd = rect_decomposition(p);
    const std::size_t r = rd.rectangle_count();
    if (r < 2)
        throw std::domain_error("singular_intersection: smooth Schubert variety, empty singular locus");
    std::vector<std::int64_t> parts;
    detail::append_block(parts, rd.blocks[0].width, rd.blocks[0].height - 1);
    for (std::size_t j = 1; j + 1 < r; ++j)
        detail::append_block(parts, rd.blocks[j].width - 1, rd.blocks[j].height);
    detail::append_block(parts, rd.blocks[r - 1].width - 1, rd.blocks[r - 1].height + 1);
    return Partition(std::move(parts));
}

/// Cells of p that are missing from singular component i (1-based).
/// Always a connected rim hook through inner corner i, sorted row-major.
inline std::vector<Cell> removed_hook(const Partition& p, std::size_t component_index) {
    const auto components = singular_components(p);
    if (component_index == 0 || component_index > components.size())
        throw std::invalid_argument("removed_hook: component index out of range 1..r-1");
    const Partition& q = components[component_index - 1];
    std::vector<Cell> cells;
    for (std::size_t row = 0; row < p.length(); ++row)
        for (std::int64_t col = q.part(row); col < p.parts()[row]; ++col)
            cells.push_back({static_cast<std::int64_t>(row), col});
    return cells;
}

/// Whether singular components i and j (1-based, i != j) intersect
/// properly, i.e. their removed hooks are disjoint.  Hooks at adjacent
/// inner corners always share exactly one diagram cell, so this is
/// equivalent to |i - j| >= 2.
inline bool components_intersect_properly(const Partition& p, std::size_t i, std::size_t j) {
    if (i == j)
        throw std::invalid_argument("components_intersect_properly: indices must differ");
    const auto hi = removed_hook(p, i);
    const auto hj = removed_hook(p, j);
    std::vector<Cell> shared;
    std::set_intersection(hi.begin(), hi.end(), hj.begin(), hj.end(), std::back_inserter(shared));
    return shared.empty();
}

} // namespace schubert
