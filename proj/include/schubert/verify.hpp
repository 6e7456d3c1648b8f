#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cell_poset.hpp"
#include "deciders.hpp"
#include "enumerate.hpp"
#include "partition.hpp"
#include "qbinomial.hpp"
#include "singular_locus.hpp"
#include "skew_shape.hpp"

namespace schubert {

/// Result of an exhaustive sweep: how many instances were examined and a
/// description of each violation, in instance order regardless of job
/// count.  elapsed_ms is wall time and is the one field that may vary
/// between otherwise identical runs.
struct Report {
    std::int64_t checked{0};
    std::vector<std::string> failures;
    std::int64_t elapsed_ms{0};
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.  Each instance
/// owns its output slot, so results are identical to a serial run; the
/// first exception, if any, is rethrown on the calling thread.
template <class Fn>
inline void run_indexed(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(
        {static_cast<std::size_t>(jobs), count, hw ? hw : 1});
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
}

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void flatten(Report& report, std::vector<std::vector<std::string>>& slots) {
    for (auto& slot : slots)
        for (auto& f : slot) report.failures.push_back(std::move(f));
}

/// Shape sweeps refuse cell bounds past the enumeration ceiling up front,
/// before any enumeration work happens.
inline void check_cell_bound(std::int64_t max_cells) {
    if (max_cells > kSkewCellDefaultLimit)
        throw ResourceLimit("sweep bound of " + std::to_string(max_cells) +
                            " cells exceeds the ceiling of " + std::to_string(kSkewCellDefaultLimit));
}

} // namespace detail

/// Replaceable internals of verify_sing_identities, used by the fault
/// injection tests to prove the sweep catches a wrong formula.  Default
/// constructed hooks select the production implementations.
struct SingSweepHooks {
    std::function<std::vector<Partition>(const Partition&)> components;
    std::function<Partition(const Partition&)> intersection;
};

/// Exhaustive check of the singular-locus component formulas over every
/// partition in the box: component count r-1, transpose duality
/// (component i of the transpose is the transposed component r-i), the
/// closed-form intersection against the componentwise fold, its transpose
/// compatibility, and reconstruction of the partition as the join of the
/// two extreme components.  Reconstruction holds exactly when the two
/// extreme hooks are disjoint, i.e. for r >= 4: at r = 3 they are adjacent
/// and always share one corner cell, so the sweep asserts it for r >= 4.
inline Report verify_sing_identities(BoxFrame box, int jobs = 1, SingSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    if (!hooks.components) hooks.components = [](const Partition& p) { return singular_components(p); };
    if (!hooks.intersection) hooks.intersection = [](const Partition& p) { return singular_intersection(p); };
    const auto all = partitions_in_box(box);
    std::vector<std::vector<std::string>> slots(all.size());
    detail::run_indexed(all.size(), jobs, [&](std::size_t idx) {
        const Partition& p = all[idx];
        auto& out = slots[idx];
        if (p.empty()) return;
        const std::string name = "lambda=" + to_text(p);
        const std::size_t r = rect_decomposition(p).rectangle_count();
        const auto comps = hooks.components(p);
        if (comps.size() + 1 != r) {
            out.push_back(name + ": expected " + std::to_string(r - 1) + " singular components, got " +
                          std::to_string(comps.size()));
            return;
        }
        const Partition pt = transpose(p);
        const auto comps_t = hooks.components(pt);
        if (comps_t.size() == comps.size()) {
            for (std::size_t i = 1; i <= comps.size(); ++i)
                if (comps_t[i - 1] != transpose(comps[comps.size() - i]))
                    out.push_back(name + ": transpose duality failed at component " + std::to_string(i) +
                                  ": " + to_text(comps_t[i - 1]) + " vs transpose of " +
                                  to_text(comps[comps.size() - i]));
        } else {
            out.push_back(name + ": component counts of transpose differ");
        }
        if (r >= 2) {
            Partition fold = comps[0];
            for (std::size_t i = 1; i < comps.size(); ++i) fold = intersect(fold, comps[i]);
            const Partition closed = hooks.intersection(p);
            if (closed != fold)
                out.push_back(name + ": closed-form intersection " + to_text(closed) +
                              " differs from component fold " + to_text(fold));
            if (transpose(closed) != hooks.intersection(pt))
                out.push_back(name + ": intersection does not commute with transpose");
        }
        if (r >= 4) {
            const Partition joined = unite(comps.front(), comps.back());
            if (joined != p)
                out.push_back(name + ": join of extreme components " + to_text(joined) +
                              " does not rebuild the partition");
        }
    });
    Report report;
    report.checked = static_cast<std::int64_t>(all.size());
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

struct ConnSweepHooks {
    std::function<std::size_t(const SkewShape&)> component_count;
    std::function<bool(const CellPoset&)> poset_connected;
};

/// Shape connectivity (at most one diagonal component) must coincide with
/// connectivity of the cell poset, over every skew shape with 1..max_cells
/// cells.
inline Report verify_lemma_conn(std::int64_t max_cells, int jobs = 1, ConnSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    detail::check_cell_bound(max_cells);
    if (!hooks.component_count)
        hooks.component_count = [](const SkewShape& s) { return components(s).size(); };
    if (!hooks.poset_connected) hooks.poset_connected = [](const CellPoset& p) { return is_connected(p); };
    std::vector<SkewShape> shapes;
    for (std::int64_t n = 1; n <= max_cells; ++n)
        for (auto& s : skew_shapes_with_cells(n, false, max_cells)) shapes.push_back(std::move(s));
    std::vector<std::vector<std::string>> slots(shapes.size());
    detail::run_indexed(shapes.size(), jobs, [&](std::size_t idx) {
        const SkewShape& s = shapes[idx];
        const bool by_shape = hooks.component_count(s) <= 1;
        const bool by_poset = hooks.poset_connected(build_poset(s));
        if (by_shape != by_poset)
            slots[idx].push_back("shape " + to_text(s) + ": diagonal connectivity " +
                                 (by_shape ? "true" : "false") + " but poset connectivity " +
                                 (by_poset ? "true" : "false"));
    });
    Report report;
    report.checked = static_cast<std::int64_t>(shapes.size());
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

struct DaggerSweepHooks {
    std::function<SkewShape(const SkewShape&)> rotate;
};

/// The half-turn rotation of a shape must have the opposite poset: for
/// every shape with 1..max_cells cells, P(rotate(theta)) is order
/// isomorphic to the dual of P(theta).
inline Report verify_dagger_duality(std::int64_t max_cells, int jobs = 1, DaggerSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    detail::check_cell_bound(max_cells);
    if (!hooks.rotate) hooks.rotate = [](const SkewShape& s) { return rotate180(s); };
    std::vector<SkewShape> shapes;
    for (std::int64_t n = 1; n <= max_cells; ++n)
        for (auto& s : skew_shapes_with_cells(n, false, max_cells)) shapes.push_back(std::move(s));
    std::vector<std::vector<std::string>> slots(shapes.size());
    detail::run_indexed(shapes.size(), jobs, [&](std::size_t idx) {
        const SkewShape& s = shapes[idx];
        const auto rotated = build_poset(hooks.rotate(s));
        const auto dual = opposite(build_poset(s));
        if (find_isomorphisms(rotated, dual).empty())
            slots[idx].push_back("shape " + to_text(s) +
                                 ": rotated poset is not isomorphic to the dual poset");
    });
    Report report;
    report.checked = static_cast<std::int64_t>(shapes.size());
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

struct StrongSkewSweepHooks {
    std::function<SkewShape(const SkewShape&)> transpose_shape;
};

/// Rigidity of connected shapes: for every ordered pair of connected
/// shapes with the same cell count (1..max_cells), poset isomorphisms
/// exist exactly when the shapes are equal or transposed, every
/// isomorphism is the identity or the transposing cell map, and the
/// automorphism group accordingly has order 1 or 2.
inline Report verify_strongskew(std::int64_t max_cells, int jobs = 1, StrongSkewSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    detail::check_cell_bound(max_cells);
    if (!hooks.transpose_shape) hooks.transpose_shape = [](const SkewShape& s) { return transpose(s); };
    Report report;
    std::vector<std::vector<SkewShape>> by_size;
    std::vector<std::vector<CellPoset>> posets_by_size;
    for (std::int64_t n = 1; n <= max_cells; ++n) {
        by_size.push_back(skew_shapes_with_cells(n, true, max_cells));
        posets_by_size.emplace_back();
        for (const auto& s : by_size.back()) posets_by_size.back().push_back(build_poset(s));
    }
    // one instance per (size, left shape); the instance walks all right shapes
    std::vector<std::pair<std::size_t, std::size_t>> instances;
    for (std::size_t g = 0; g < by_size.size(); ++g)
        for (std::size_t i = 0; i < by_size[g].size(); ++i) instances.push_back({g, i});
    std::vector<std::vector<std::string>> slots(instances.size());
    detail::run_indexed(instances.size(), jobs, [&](std::size_t idx) {
        const auto [g, i] = instances[idx];
        const auto& shapes = by_size[g];
        const auto& posets = posets_by_size[g];
        const SkewShape& a = shapes[i];
        const SkewShape at = hooks.transpose_shape(a);
        auto& out = slots[idx];
        for (std::size_t j = 0; j < shapes.size(); ++j) {
            const SkewShape& b = shapes[j];
            const auto isos = find_isomorphisms(posets[i], posets[j]);
            const bool expect = a == b || at == b;
            const std::string pair_name = to_text(a) + " vs " + to_text(b);
            if (isos.empty() != !expect) {
                out.push_back(pair_name + ": isomorphisms " + (isos.empty() ? "absent" : "present") +
                              " but shapes are " + (expect ? "" : "not ") + "equal or transposed");
                continue;
            }
            std::size_t expected_count = 0;
            for (const auto& iso : isos) {
                bool is_identity = a == b;
                bool is_transposing = at == b;
                for (std::size_t e = 0; e < a.cells().size() && (is_identity || is_transposing); ++e) {
                    const Cell src = a.cells()[e];
                    const Cell dst = b.cells()[static_cast<std::size_t>(iso[e])];
                    if (dst != src) is_identity = false;
                    if (dst != Cell{src.col, src.row}) is_transposing = false;
                }
                if (!is_identity && !is_transposing)
                    out.push_back(pair_name + ": an isomorphism is neither the identity nor the transposing map");
            }
            if (a == b) {
                ++expected_count; // the identity
                // the transposing map is a second automorphism unless it
                // coincides with the identity (single box only)
                if (at == a && a.size() > 1) ++expected_count;
                if (isos.size() != expected_count)
                    out.push_back(pair_name + ": automorphism count " + std::to_string(isos.size()) +
                                  ", expected " + std::to_string(expected_count));
            }
        }
    });
    for (std::size_t g = 0; g < by_size.size(); ++g)
        report.checked += static_cast<std::int64_t>(by_size[g].size() * by_size[g].size());
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

struct BettiSweepHooks {
    std::function<std::vector<Count>(const Partition&)> counts;
    std::function<std::vector<Count>(std::int64_t, std::int64_t)> qbinom;
};

/// Subdiagram counts must be transpose symmetric over the whole box, and
/// on every rectangle fitting in the box they must equal the Gaussian
/// binomial coefficients, which are computed by an unrelated recurrence.
inline Report verify_betti_identities(BoxFrame box, int jobs = 1, BettiSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    if (!hooks.counts) hooks.counts = [](const Partition& p) { return subdiagram_counts(p); };
    if (!hooks.qbinom) hooks.qbinom = [](std::int64_t a, std::int64_t b) { return gaussian_binomial(a, b); };
    const auto all = partitions_in_box(box);
    std::vector<std::pair<std::int64_t, std::int64_t>> rects;
    for (std::int64_t a = 0; a <= box.cols; ++a)
        for (std::int64_t b = 0; b <= box.rows; ++b) rects.push_back({a, b});
    const std::size_t total = all.size() + rects.size();
    std::vector<std::vector<std::string>> slots(total);
    detail::run_indexed(total, jobs, [&](std::size_t idx) {
        auto& out = slots[idx];
        if (idx < all.size()) {
            const Partition& p = all[idx];
            if (hooks.counts(p) != hooks.counts(transpose(p)))
                out.push_back("lambda=" + to_text(p) + ": subdiagram counts differ from the transpose's");
        } else {
            const auto [a, b] = rects[idx - all.size()];
            std::vector<std::int64_t> parts(static_cast<std::size_t>(b), a);
            const Partition rect{parts};
            if (hooks.counts(rect) != hooks.qbinom(a, b))
                out.push_back("rectangle " + std::to_string(a) + "^" + std::to_string(b) +
                              ": subdiagram counts differ from the Gaussian binomial");
        }
    });
    Report report;
    report.checked = static_cast<std::int64_t>(total);
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

struct SemiSweepHooks {
    /// Sorted canonical forms of the diagonal components; the fast
    /// semi-isomorphism test compares these multisets.
    std::function<std::vector<SkewShape>(const SkewShape&)> classes;
};

/// The canonical-form fast path for semi-isomorphism must agree with the
/// matching oracle (poset isomorphism search componentwise plus bipartite
/// matching) on every unordered pair of shapes with 1..max_cells cells.
inline Report verify_semi_agreement(std::int64_t max_cells, int jobs = 1, SemiSweepHooks hooks = {}) {
    detail::Stopwatch timer;
    detail::check_cell_bound(max_cells);
    if (!hooks.classes)
        hooks.classes = [](const SkewShape& s) {
            std::vector<SkewShape> out;
            for (const auto& c : components(s)) out.push_back(canonical_form(c));
            std::sort(out.begin(), out.end());
            return out;
        };
    std::vector<SkewShape> shapes;
    for (std::int64_t n = 1; n <= max_cells; ++n)
        for (auto& s : skew_shapes_with_cells(n, false, max_cells)) shapes.push_back(std::move(s));
    std::vector<std::vector<SkewShape>> comps(shapes.size());
    std::vector<std::vector<SkewShape>> fast_classes(shapes.size());
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        comps[i] = components(shapes[i]);
        fast_classes[i] = hooks.classes(shapes[i]);
    }
    // Compatibility of component pairs under the oracle, precomputed once
    // so the parallel stage only reads it.
    std::map<SkewShape, std::size_t> comp_id;
    std::vector<const SkewShape*> distinct;
    std::vector<std::vector<std::size_t>> comp_ids(shapes.size());
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (const auto& c : comps[i]) {
            auto [it, inserted] = comp_id.try_emplace(c, distinct.size());
            if (inserted) distinct.push_back(&it->first);
            comp_ids[i].push_back(it->second);
        }
    const std::size_t m = distinct.size();
    std::vector<CellPoset> comp_posets;
    comp_posets.reserve(m);
    for (const auto* c : distinct) comp_posets.push_back(build_poset(*c));
    std::vector<std::vector<char>> compat(m, std::vector<char>(m));
    detail::run_indexed(m, jobs, [&](std::size_t x) {
        const CellPoset dual = opposite(comp_posets[x]);
        for (std::size_t y = 0; y < m; ++y)
            compat[x][y] = !find_isomorphisms(comp_posets[x], comp_posets[y]).empty() ||
                           !find_isomorphisms(dual, comp_posets[y]).empty();
    });

    auto oracle = [&](std::size_t i, std::size_t j) {
        const auto& left = comp_ids[i];
        const auto& right = comp_ids[j];
        if (left.size() != right.size()) return false;
        const std::size_t k = left.size();
        std::vector<int> match_of_right(k, -1);
        auto augment = [&](auto&& self, std::size_t x, std::vector<char>& visited) -> bool {
            for (std::size_t y = 0; y < k; ++y) {
                if (visited[y] || !compat[left[x]][right[y]]) continue;
                visited[y] = 1;
                if (match_of_right[y] < 0 ||
                    self(self, static_cast<std::size_t>(match_of_right[y]), visited))
                    { match_of_right[y] = static_cast<int>(x); return true; }
            }
            return false;
        };
        for (std::size_t x = 0; x < k; ++x) {
            std::vector<char> visited(k, 0);
            if (!augment(augment, x, visited)) return false;
        }
        return true;
    };

    std::vector<std::vector<std::string>> slots(shapes.size());
    std::atomic<std::int64_t> pair_count{0};
    detail::run_indexed(shapes.size(), jobs, [&](std::size_t i) {
        std::int64_t local = 0;
        for (std::size_t j = i; j < shapes.size(); ++j) {
            ++local;
            const bool fast = fast_classes[i] == fast_classes[j];
            const bool slow = oracle(i, j);
            if (fast != slow)
                slots[i].push_back(to_text(shapes[i]) + " vs " + to_text(shapes[j]) +
                                   ": fast path says " + (fast ? "yes" : "no") + ", matching oracle says " +
                                   (slow ? "yes" : "no"));
        }
        pair_count += local;
    });
    Report report;
    report.checked = pair_count.load();
    detail::flatten(report, slots);
    report.elapsed_ms = timer.ms();
    return report;
}

/// One pair of shapes that the numerical invariants cannot tell apart even
/// though they are not semi-isomorphic.
struct Collision {
    SkewShape left, right;
};

struct CollisionReport {
    std::int64_t checked{0};
    std::vector<Collision> collisions;
    std::int64_t elapsed_ms{0};
};

/// Searches all shapes with up to max_cells cells for pairs that share the
/// numerical part of the invariant signature (cell count, component sizes,
/// order-ideal counts, hook profile) without being semi-isomorphic.  An
/// empty result over a range is evidence, not proof, that the numerical
/// invariants decide semi-isomorphism there; nonempty results would be
/// counterexample candidates for the underlying conjecture.  The component
/// canonical forms themselves are deliberately excluded from the grouping
/// key, since matching them is the definition of semi-isomorphism.
inline CollisionReport collision_search(std::int64_t max_cells,
                                        std::size_t max_ideal_elements = kIdealElementLimit) {
    detail::Stopwatch timer;
    detail::check_cell_bound(max_cells);
    CollisionReport report;
    using NumericKey = std::tuple<std::int64_t, std::vector<std::int64_t>, std::vector<Count>,
                                  std::vector<std::int64_t>>;
    std::map<NumericKey, std::vector<SkewShape>> groups;
    for (std::int64_t n = 1; n <= max_cells; ++n)
        for (auto& s : skew_shapes_with_cells(n, false, max_cells)) {
            const auto sig = invariant_signature(s, max_ideal_elements);
            std::vector<std::int64_t> comp_sizes;
            for (const auto& c : sig.component_classes)
                comp_sizes.push_back(static_cast<std::int64_t>(c.size()));
            std::sort(comp_sizes.begin(), comp_sizes.end());
            groups[{sig.cell_count, std::move(comp_sizes), sig.ideal_counts, sig.hook_profile}]
                .push_back(std::move(s));
            ++report.checked;
        }
    for (const auto& [key, members] : groups)
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!semi_isomorphic(members[i], members[j]))
                    report.collisions.push_back({members[i], members[j]});
    report.elapsed_ms = timer.ms();
    return report;
}

} // namespace schubert
