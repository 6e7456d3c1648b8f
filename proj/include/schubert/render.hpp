#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cell_poset.hpp"
#include "deciders.hpp"
#include "partition.hpp"
#include "skew_shape.hpp"
#include "verify.hpp"

namespace schubert {

/// Young diagram as rows of filled boxes, top row first.
inline std::string render_ascii(const Partition& p) {
    if (p.empty()) return "(empty)\n";
    std::string out;
    for (auto part : p.parts()) {
        for (std::int64_t j = 0; j < part; ++j) out += "▪";
        out += '\n';
    }
    return out;
}

/// Skew diagram with spaces left of each row's first cell.  Rows inside
/// the shape that carry no cells show a single dot so they do not read as
/// missing.
inline std::string render_ascii(const SkewShape& s) {
    if (s.empty()) return "(empty)\n";
    std::string out;
    for (const auto& iv : row_intervals(s)) {
        if (iv[0] == iv[1]) {
            out += "·";
        } else {
            for (std::int64_t j = 0; j < iv[0]; ++j) out += ' ';
            for (std::int64_t j = iv[0]; j < iv[1]; ++j) out += "▪";
        }
        out += '\n';
    }
    return out;
}

/// Hasse diagram in DOT, covers drawn bottom-up, nodes labeled "row,col".
inline std::string to_dot(const CellPoset& p) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.elements.size(); ++i)
        out += "  c" + std::to_string(i) + " [label=\"" + std::to_string(p.elements[i].row) + "," +
               std::to_string(p.elements[i].col) + "\"];\n";
    for (auto [a, b] : p.covers)
        out += "  c" + std::to_string(a) + " -> c" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

inline nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

/// {"rows": [[l, r], ...]}: per-row column intervals [l, r), degenerate
/// intervals marking empty rows.  Inverse of skew_from_json.
inline nlohmann::json to_json(const SkewShape& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& iv : row_intervals(s)) rows.push_back({iv[0], iv[1]});
    return nlohmann::json{{"rows", rows}};
}

inline SkewShape skew_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("skew json: expected an object with a \"rows\" array");
    std::vector<Cell> cells;
    std::int64_t row = 0;
    for (const auto& iv : j["rows"]) {
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() || !iv[1].is_number_integer())
            throw std::invalid_argument("skew json: each row must be an integer pair [left, right)");
        const std::int64_t l = iv[0].get<std::int64_t>(), r = iv[1].get<std::int64_t>();
        if (l > r) throw std::invalid_argument("skew json: interval with left > right");
        for (std::int64_t c = l; c < r; ++c) cells.push_back({row, c});
        ++row;
    }
    return SkewShape(std::move(cells));
}

inline nlohmann::json to_json(const CellPoset& p) {
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& c : p.elements) elements.push_back({c.row, c.col});
    nlohmann::json covers = nlohmann::json::array();
    for (auto [a, b] : p.covers) covers.push_back({a, b});
    return nlohmann::json{{"elements", elements}, {"covers", covers}};
}

inline nlohmann::json to_json(const Report& r) {
    return nlohmann::json{{"checked", r.checked}, {"failures", r.failures}, {"elapsedMs", r.elapsed_ms}};
}

/// Counts as decimal strings: they exceed 64-bit JSON numbers on larger
/// inputs and exact round-tripping matters more than numeric typing.
inline nlohmann::json counts_to_json(const std::vector<Count>& counts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : counts) out.push_back(c.str());
    return out;
}

} // namespace schubert
