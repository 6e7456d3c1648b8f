#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "count.hpp"
#include "errors.hpp"
#include "skew_shape.hpp"

namespace schubert {

/// Finite poset on the cells of a skew shape, given by its Hasse relation.
/// covers holds index pairs (i, j) with elements[i] covered by elements[j];
/// both lists are sorted, so equal posets compare equal componentwise.
struct CellPoset {
    std::vector<Cell> elements;
    std::vector<std::pair<int, int>> covers;

    friend auto operator<=>(const CellPoset&, const CellPoset&) = default;
};

/// Partial order generated by "immediately left of" and "immediately
/// above": cell (r, c) is covered by (r, c+1) and (r+1, c) when present.
/// The NW-most cell of a connected shape is the unique minimum.  Cover
/// steps raise row + col by one, so the relation is transitively reduced
/// as built.
inline CellPoset build_poset(const SkewShape& s) {
    CellPoset p;
    p.elements = s.cells();
    std::map<Cell, int> index;
    for (int i = 0; i < static_cast<int>(p.elements.size()); ++i) index[p.elements[i]] = i;
    for (int i = 0; i < static_cast<int>(p.elements.size()); ++i) {
        const Cell c = p.elements[i];
        for (Cell next : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
            auto it = index.find(next);
            if (it != index.end()) p.covers.push_back({i, it->second});
        }
    }
    std::sort(p.covers.begin(), p.covers.end());
    return p;
}

/// Order-theoretic dual: same elements, every cover reversed.  Involutive.
inline CellPoset opposite(const CellPoset& p) {
    CellPoset q;
    q.elements = p.elements;
    q.covers.reserve(p.covers.size());
    for (auto [a, b] : p.covers) q.covers.push_back({b, a});
    std::sort(q.covers.begin(), q.covers.end());
    return q;
}

/// Connectivity of the comparability graph.  Empty and one-element posets
/// are connected; this matches the at-most-one-component convention on
/// shapes.
inline bool is_connected(const CellPoset& p) {
    const std::size_t n = p.elements.size();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : p.covers) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

namespace detail {

struct PosetView {
    int n{0};
    std::vector<std::vector<int>> up, down;      // covers out of / into each element
    std::vector<int> height;                     // longest chain from a minimal element
    std::vector<std::array<int, 3>> key;         // (height, up-degree, down-degree)

    explicit PosetView(const CellPoset& p) {
        n = static_cast<int>(p.elements.size());
        up.resize(static_cast<std::size_t>(n));
        down.resize(static_cast<std::size_t>(n));
        for (auto [a, b] : p.covers) {
            up[static_cast<std::size_t>(a)].push_back(b);
            down[static_cast<std::size_t>(b)].push_back(a);
        }
        height.assign(static_cast<std::size_t>(n), 0);
        // Kahn order; cover edges all point from lower to higher height.
        std::vector<int> indeg(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) indeg[static_cast<std::size_t>(v)] = static_cast<int>(down[static_cast<std::size_t>(v)].size());
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : up[static_cast<std::size_t>(v)]) {
                height[static_cast<std::size_t>(w)] =
                    std::max(height[static_cast<std::size_t>(w)], height[static_cast<std::size_t>(v)] + 1);
                if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
            }
        }
        if (queue.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("poset: cover relation has a cycle");
        key.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            key[static_cast<std::size_t>(v)] = {height[static_cast<std::size_t>(v)],
                                                static_cast<int>(up[static_cast<std::size_t>(v)].size()),
                                                static_cast<int>(down[static_cast<std::size_t>(v)].size())};
    }

    bool covers_edge(int a, int b) const {
        const auto& u = up[static_cast<std::size_t>(a)];
        return std::find(u.begin(), u.end(), b) != u.end();
    }
};

} // namespace detail

/// Default search ceiling for the exponential routines below.
inline constexpr std::size_t kIsoElementLimit = 24;

/// Every cover-preserving bijection from p to q (isomorphisms of posets),
/// each as a vector mapping p-element index to q-element index, in a
/// deterministic order.  Backtracking with pruning on the per-element
/// invariant (height, up-degree, down-degree); assignments are checked for
/// cover preservation in both directions, so results need no postfilter.
inline std::vector<std::vector<int>> find_isomorphisms(const CellPoset& p, const CellPoset& q,
                                                       std::size_t max_elements = kIsoElementLimit) {
    if (p.elements.size() > max_elements || q.elements.size() > max_elements)
        throw ResourceLimit("find_isomorphisms: poset larger than " + std::to_string(max_elements) + " elements");
    std::vector<std::vector<int>> found;
    if (p.elements.size() != q.elements.size() || p.covers.size() != q.covers.size())
        return found;
    const detail::PosetView vp(p), vq(q);
    auto keys_p = vp.key;
    auto keys_q = vq.key;
    std::sort(keys_p.begin(), keys_p.end());
    std::sort(keys_q.begin(), keys_q.end());
    if (keys_p != keys_q) return found;
    if (vp.n == 0) return {std::vector<int>{}};

    std::vector<int> order(static_cast<std::size_t>(vp.n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(vp.key[static_cast<std::size_t>(a)], a) < std::pair(vp.key[static_cast<std::size_t>(b)], b);
    });

    std::vector<int> image(static_cast<std::size_t>(vp.n), -1);
    std::vector<char> used(static_cast<std::size_t>(vq.n), 0);
    std::vector<int> assigned; // prefix of `order` already mapped

    auto consistent = [&](int a, int b) {
        for (int a2 : assigned) {
            const int b2 = image[static_cast<std::size_t>(a2)];
            if (vp.covers_edge(a, a2) != vq.covers_edge(b, b2)) return false;
            if (vp.covers_edge(a2, a) != vq.covers_edge(b2, b)) return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            found.push_back(image);
            return;
        }
        const int a = order[pos];
        for (int b = 0; b < vq.n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            if (vq.key[static_cast<std::size_t>(b)] != vp.key[static_cast<std::size_t>(a)]) continue;
            if (!consistent(a, b)) continue;
            image[static_cast<std::size_t>(a)] = b;
            used[static_cast<std::size_t>(b)] = 1;
            assigned.push_back(a);
            self(self, pos + 1);
            assigned.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
            image[static_cast<std::size_t>(a)] = -1;
        }
    };
    recurse(recurse, 0);
    return found;
}

inline std::size_t automorphism_count(const CellPoset& p, std::size_t max_elements = kIsoElementLimit) {
    return find_isomorphisms(p, p, max_elements).size();
}

/// Least normalized cell set among the shape, its transpose, its half-turn
/// rotation, and the rotation's transpose.  Two connected shapes have
/// order-isomorphic posets up to duality exactly when their canonical
/// forms agree, which turns semi-isomorphism testing into multiset
/// comparison.  Requires a connected shape (the empty shape passes).
inline SkewShape canonical_form(const SkewShape& s) {
    if (!is_connected(s))
        throw std::domain_error("canonical_form: shape must be connected");
    SkewShape best = s;
    const SkewShape t = transpose(s);
    const SkewShape r = rotate180(s);
    const SkewShape rt = transpose(r);
    for (const SkewShape& candidate : {t, r, rt})
        if (candidate < best) best = candidate;
    return best;
}

/// Semi-isomorphism of skew shapes: the diagonal components of one can be
/// matched bijectively with the components of the other so that paired
/// posets are isomorphic or dual-isomorphic.  Fast path: compare component
/// canonical forms as multisets.
inline bool semi_isomorphic(const SkewShape& a, const SkewShape& b) {
    auto classes = [](const SkewShape& s) {
        std::vector<SkewShape> out;
        for (const auto& c : components(s)) out.push_back(canonical_form(c));
        std::sort(out.begin(), out.end());
        return out;
    };
    return classes(a) == classes(b);
}

/// Reference implementation of semi-isomorphism that never looks at cell
/// coordinates across shapes: it builds the component posets, tests pair
/// compatibility with find_isomorphisms (direct or against the dual), and
/// asks for a perfect matching (augmenting paths in index order).
inline bool semi_isomorphic_by_matching(const SkewShape& a, const SkewShape& b,
                                        std::size_t max_elements = kIsoElementLimit) {
    const auto ca = components(a);
    const auto cb = components(b);
    if (ca.size() != cb.size()) return false;
    const std::size_t n = ca.size();
    std::vector<CellPoset> pa, pb;
    for (const auto& c : ca) pa.push_back(build_poset(c));
    for (const auto& c : cb) pb.push_back(build_poset(c));
    std::vector<std::vector<char>> compat(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            compat[i][j] = !find_isomorphisms(pa[i], pb[j], max_elements).empty() ||
                           !find_isomorphisms(opposite(pa[i]), pb[j], max_elements).empty();
    std::vector<int> match_of_b(n, -1);
    auto augment = [&](auto&& self, std::size_t i, std::vector<char>& visited) -> bool {
        for (std::size_t j = 0; j < n; ++j) {
            if (!compat[i][j] || visited[j]) continue;
            visited[j] = 1;
            if (match_of_b[j] < 0 || self(self, static_cast<std::size_t>(match_of_b[j]), visited)) {
                match_of_b[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> visited(n, 0);
        if (!augment(augment, i, visited)) return false;
    }
    return true;
}

/// Default ceiling for order-ideal counting; the frontier DP below is
/// exponential in the worst-case antichain width.
inline constexpr std::size_t kIdealElementLimit = 20;

/// counts[s] = number of order ideals (down-closed subsets) of p with
/// exactly s elements, s = 0..n.  For the poset of a straight shape these
/// equal the subdiagram counts of its partition, which is the bridge
/// between Betti numbers and ideal counting.
///
/// Frontier DP: process elements in a topological order, keep one bit of
/// ideal membership only for "open" elements, i.e. those with a successor
/// still unprocessed.  An element may join the ideal only if all its cover
/// predecessors did (they are necessarily still open).  Bits of elements
/// whose last successor has been processed are forgotten, merging states.
inline std::vector<Count> order_ideal_counts(const CellPoset& p,
                                             std::size_t max_elements = kIdealElementLimit) {
    const std::size_t n = p.elements.size();
    if (n > max_elements)
        throw ResourceLimit("order_ideal_counts: poset larger than " + std::to_string(max_elements) + " elements");
    if (n == 0) return {Count(1)};
    const detail::PosetView view(p);
    // topological order, smallest index first for determinism
    std::vector<int> indeg(n);
    for (std::size_t v = 0; v < n; ++v) indeg[v] = static_cast<int>(view.down[v].size());
    std::set<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.insert(static_cast<int>(v));
    std::vector<int> topo;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        topo.push_back(v);
        for (int w : view.up[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.insert(w);
    }
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(topo[i])] = static_cast<int>(i);
    std::vector<int> last_needed(n);
    for (std::size_t v = 0; v < n; ++v) {
        last_needed[v] = pos[v];
        for (int w : view.up[v]) last_needed[v] = std::max(last_needed[v], pos[static_cast<std::size_t>(w)]);
    }

    std::map<std::uint32_t, std::vector<Count>> states;
    states[0] = std::vector<Count>(n + 1);
    states[0][0] = Count(1);
    for (std::size_t step = 0; step < n; ++step) {
        const int e = topo[step];
        const std::uint32_t ebit = std::uint32_t{1} << e;
        std::uint32_t close_mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (last_needed[v] == static_cast<int>(step)) close_mask |= std::uint32_t{1} << v;
        std::map<std::uint32_t, std::vector<Count>> next;
        auto add_state = [&](std::uint32_t mask, const std::vector<Count>& vec, bool shift) {
            mask &= ~close_mask;
            auto [it, inserted] = next.try_emplace(mask, std::vector<Count>(n + 1));
            auto& dst = it->second;
            for (std::size_t s = 0; s + (shift ? 1 : 0) <= n; ++s)
                dst[s + (shift ? 1 : 0)] += vec[s];
        };
        for (const auto& [mask, vec] : states) {
            add_state(mask, vec, false); // e stays out of the ideal
            bool preds_in = true;
            for (int d : view.down[static_cast<std::size_t>(e)])
                if (!(mask & (std::uint32_t{1} << d))) { preds_in = false; break; }
            if (preds_in) add_state(mask | ebit, vec, true);
        }
        states = std::move(next);
    }
    if (states.size() != 1 || states.begin()->first != 0)
        throw std::logic_error("order_ideal_counts: frontier not fully closed");
    return states.begin()->second;
}

} // namespace schubert
