#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cell_poset.hpp"
#include "partition.hpp"
#include "singular_locus.hpp"
#include "skew_shape.hpp"

namespace schubert {

/// Grassmannian Schubert varieties are isomorphic as varieties exactly
/// when their partitions are equal or transposed.  This is the full
/// classification, so the decider is this one comparison.
inline bool schubert_isomorphic(const Partition& a, const Partition& b) {
    return a == b || transpose(a) == b;
}

/// Longest hook fitting inside the shape: over all cells, the maximal
/// rightward run plus downward run minus one.  Agrees with xi() on
/// straight shapes.  Zero on the empty shape.
inline std::int64_t longest_hook(const SkewShape& s) {
    std::int64_t best = 0;
    const auto& cells = s.cells();
    auto has = [&](Cell c) { return std::binary_search(cells.begin(), cells.end(), c); };
    for (const auto& c : cells) {
        std::int64_t arm = 0, leg = 0;
        while (has({c.row, c.col + arm + 1})) ++arm;
        while (has({c.row + leg + 1, c.col})) ++leg;
        best = std::max(best, arm + leg + 1);
    }
    return best;
}

/// Numerical and structural invariants of a skew shape that are preserved
/// by semi-isomorphism.  component_classes pins the full semi-isomorphism
/// class; the other three fields are the purely numerical shadow used when
/// hunting for shapes that agree numerically yet are not semi-isomorphic.
struct InvariantSignature {
    std::int64_t cell_count{0};
    std::vector<SkewShape> component_classes;   // canonical forms, sorted
    std::vector<Count> ideal_counts;            // per-component counts folded with their reversal, then convolved
    std::vector<std::int64_t> hook_profile;     // per component, maximized over its symmetry orbit, sorted

    friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
};

namespace detail {

inline std::vector<Count> convolve(const std::vector<Count>& a, const std::vector<Count>& b) {
    std::vector<Count> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace detail

inline InvariantSignature invariant_signature(const SkewShape& s,
                                              std::size_t max_ideal_elements = kIdealElementLimit) {
    InvariantSignature sig;
    sig.cell_count = static_cast<std::int64_t>(s.size());
    sig.ideal_counts = {Count(1)};
    for (const auto& comp : components(s)) {
        sig.component_classes.push_back(canonical_form(comp));
        // rotating a component dualizes its cell poset, which reverses the
        // ideal counts by rank; fold the two orders together before mixing
        // components, since a rotation may touch one component and not another
        auto counts = order_ideal_counts(build_poset(comp), max_ideal_elements);
        auto reversed = counts;
        std::reverse(reversed.begin(), reversed.end());
        sig.ideal_counts = detail::convolve(sig.ideal_counts, std::min(counts, reversed));
        // the hook statistic must not depend on which orbit representative
        // we happened to store, and rotation can change it
        sig.hook_profile.push_back(std::max(longest_hook(comp), longest_hook(rotate180(comp))));
    }
    std::sort(sig.component_classes.begin(), sig.component_classes.end());
    std::sort(sig.hook_profile.begin(), sig.hook_profile.end());
    return sig;
}

/// Outcome of the invariant ladder on a pair of partitions.  rung 0 means
/// isomorphic (relation "equal" or "transpose").  Otherwise rung names the
/// first level that separates the pair: 1 cell count, 2 subdiagram counts,
/// 3 rectangle count, 4 rectangle count of the singular intersection,
/// 5 hook lengths of the extreme singular components, 6 recursive descent
/// into the singular locus, 7 no witness found (the varieties are still
/// non-isomorphic; this outcome is allowed and recorded as such).
struct SchubertReport {
    bool isomorphic{false};
    std::string relation;            // "equal" | "transpose" | ""
    int rung{0};
    std::string witness;
    std::vector<std::string> trace;
};

namespace detail {

inline std::string counts_brief(const std::vector<Count>& c, std::size_t upto) {
    std::string out = "[";
    for (std::size_t i = 0; i <= upto && i < c.size(); ++i) {
        if (i) out += ",";
        out += c[i].str();
    }
    out += c.size() > upto + 1 ? ",...]" : "]";
    return out;
}

inline SchubertReport distinguish_impl(const Partition& a, const Partition& b,
                                       std::map<std::pair<Partition, Partition>, SchubertReport>& memo);

/// Appends the nested report for a separated sub-pair, indented one level.
inline void nest_trace(SchubertReport& report, const std::string& label, const Partition& a,
                       const Partition& b, std::map<std::pair<Partition, Partition>, SchubertReport>& memo) {
    const auto sub = distinguish_impl(a, b, memo);
    report.trace.push_back("  " + label + ": " + to_text(a) + " vs " + to_text(b));
    for (const auto& line : sub.trace) report.trace.push_back("  " + line);
}

inline SchubertReport distinguish_impl(const Partition& a, const Partition& b,
                                       std::map<std::pair<Partition, Partition>, SchubertReport>& memo) {
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    SchubertReport rep;
    auto finish = [&](int rung, std::string witness) {
        rep.rung = rung;
        rep.witness = std::move(witness);
        rep.trace.insert(rep.trace.begin(), "rung " + std::to_string(rung) + ": " + rep.witness);
        memo[{a, b}] = rep;
        return rep;
    };

    if (schubert_isomorphic(a, b)) {
        rep.isomorphic = true;
        rep.relation = a == b ? "equal" : "transpose";
        rep.trace.push_back("isomorphic (" + rep.relation + ")");
        memo[{a, b}] = rep;
        return rep;
    }

    if (a.size() != b.size())
        return finish(1, "cell counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));

    const auto ca = subdiagram_counts(a);
    const auto cb = subdiagram_counts(b);
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i])
            return finish(2, "subdiagram counts first differ at size " + std::to_string(i) + ": " +
                                 ca[i].str() + " vs " + cb[i].str() + " (" + counts_brief(ca, i) + " vs " +
                                 counts_brief(cb, i) + ")");

    const auto ra = rect_decomposition(a).rectangle_count();
    const auto rb = rect_decomposition(b).rectangle_count();
    if (ra != rb)
        return finish(3, "rectangle counts differ: " + std::to_string(ra) + " vs " + std::to_string(rb));

    if (ra >= 2) {
        const auto za = singular_intersection(a);
        const auto zb = singular_intersection(b);
        const auto r0a = rect_decomposition(za).rectangle_count();
        const auto r0b = rect_decomposition(zb).rectangle_count();
        if (r0a != r0b)
            return finish(4, "rectangle counts of the singular intersections differ: " +
                                 std::to_string(r0a) + " vs " + std::to_string(r0b));

        const auto comps_a = singular_components(a);
        const auto comps_b = singular_components(b);
        // hook length of the extreme components, 0 for an empty component
        auto hook_pair = [](const std::vector<Partition>& comps) {
            std::int64_t lo = comps.front().empty() ? 0 : xi(comps.front());
            std::int64_t hi = comps.back().empty() ? 0 : xi(comps.back());
            if (lo > hi) std::swap(lo, hi);
            return std::pair(lo, hi);
        };
        const auto ha = hook_pair(comps_a);
        const auto hb = hook_pair(comps_b);
        if (ha != hb)
            return finish(5, "extreme-component hook lengths differ: {" + std::to_string(ha.first) + "," +
                                 std::to_string(ha.second) + "} vs {" + std::to_string(hb.first) + "," +
                                 std::to_string(hb.second) + "}");

        if (!schubert_isomorphic(za, zb)) {
            auto out = finish(6, "singular intersections are not isomorphic");
            nest_trace(out, "descend", za, zb, memo);
            memo[{a, b}] = out;
            return out;
        }
        auto iso = [](const Partition& x, const Partition& y) { return schubert_isomorphic(x, y); };
        const bool direct = iso(comps_a.front(), comps_b.front()) && iso(comps_a.back(), comps_b.back());
        const bool crossed = iso(comps_a.front(), comps_b.back()) && iso(comps_a.back(), comps_b.front());
        if (!direct && !crossed) {
            auto out = finish(6, "extreme singular components admit no isomorphic pairing");
            // nest a sub-pair that genuinely fails under every pairing
            if (!iso(comps_a.front(), comps_b.front()) && !iso(comps_a.front(), comps_b.back()))
                nest_trace(out, "descend", comps_a.front(), comps_b.front(), memo);
            else if (iso(comps_a.front(), comps_b.front()))
                nest_trace(out, "descend", comps_a.back(), comps_b.back(), memo);
            else
                nest_trace(out, "descend", comps_a.back(), comps_b.front(), memo);
            memo[{a, b}] = out;
            return out;
        }
    }

    return finish(7, "no separating invariant in this family");
}

} // namespace detail

/// Runs the invariant ladder and reports the first separating level with a
/// human-readable witness and, for recursive witnesses, an indented trace.
inline SchubertReport distinguish_schubert(const Partition& a, const Partition& b) {
    std::map<std::pair<Partition, Partition>, SchubertReport> memo;
    return detail::distinguish_impl(a, b, memo);
}

/// Sufficient test for isomorphism of open Richardson varieties attached
/// to skew shapes.  A positive answer (semi-isomorphic shapes) proves the
/// varieties isomorphic.  A negative answer is reported as unknown: the
/// converse holds in every verified range but is conjectural.
struct RichardsonReport {
    bool isomorphic{false};
    std::string detail;
};

inline RichardsonReport richardson_sufficient(const SkewShape& a, const SkewShape& b) {
    RichardsonReport rep;
    if (semi_isomorphic(a, b)) {
        rep.isomorphic = true;
        rep.detail = "semi-isomorphic: component posets match up to order duality";
        return rep;
    }
    rep.isomorphic = false;
    std::string why;
    if (a.size() != b.size()) {
        why = "cell counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    } else {
        const auto ca = components(a);
        const auto cb = components(b);
        if (ca.size() != cb.size()) {
            why = "component counts differ: " + std::to_string(ca.size()) + " vs " + std::to_string(cb.size());
        } else {
            auto classes = [](const std::vector<SkewShape>& comps) {
                std::vector<SkewShape> out;
                for (const auto& c : comps) out.push_back(canonical_form(c));
                std::sort(out.begin(), out.end());
                return out;
            };
            const auto qa = classes(ca);
            const auto qb = classes(cb);
            for (std::size_t i = 0; i < qa.size(); ++i)
                if (!(qa[i] == qb[i])) {
                    why = "component classes differ: " + to_text(qa[i]) + " vs " + to_text(qb[i]);
                    break;
                }
        }
    }
    rep.detail = "not semi-isomorphic (" + why +
                 "); the varieties are conjectured non-isomorphic, but only the positive direction is proven";
    return rep;
}

} // namespace schubert
