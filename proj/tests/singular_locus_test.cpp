#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <schubert/enumerate.hpp>
#include <schubert/singular_locus.hpp>

#include "support/oracles.hpp"

using namespace schubert;

TEST_CASE("worked singular loci") {
    const Partition p{4, 4, 3, 3, 1};
    const auto comps = singular_components(p);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == Partition{4, 2, 2, 2, 1});
    CHECK(comps[1] == Partition{4, 4, 3});
    CHECK(singular_intersection(p) == Partition{4, 2, 2});

    // the hook partition: one component, the empty partition
    const auto hook = singular_components(Partition{2, 1});
    REQUIRE(hook.size() == 1);
    CHECK(hook[0] == Partition{});
    CHECK(singular_intersection(Partition{3, 1}) == Partition{});

    CHECK(singular_components(Partition{3, 3}).empty());
    CHECK(is_smooth(Partition{3, 3}));
    CHECK(is_smooth(Partition{}));
    CHECK_FALSE(is_smooth(Partition{2, 1}));
    CHECK_THROWS_AS(singular_components(Partition{}), std::domain_error);
    CHECK_THROWS_AS(singular_intersection(Partition{4, 4}), std::domain_error);
    CHECK_THROWS_AS(singular_intersection(Partition{}), std::domain_error);
}

TEST_CASE("components arise by deleting boundary hooks") {
    // the cells missing from component i must be exactly the rim hook at
    // inner corner i, built here by an independent rim walk
    for (const auto& p : partitions_in_box({6, 6})) {
        if (p.empty()) continue;
        const auto comps = singular_components(p);
        const auto r = rect_decomposition(p).rectangle_count();
        REQUIRE(comps.size() + 1 == r);
        for (std::size_t i = 1; i <= comps.size(); ++i) {
            CHECK(contains(p, comps[i - 1]));
            CHECK(removed_hook(p, i) == oracles::rim_hook_cells(p, i));
        }
    }
    CHECK(removed_hook(Partition{4, 4, 3, 3, 1}, 1) ==
          std::vector<Cell>{{1, 2}, {1, 3}, {2, 2}, {3, 2}});
    CHECK(removed_hook(Partition{4, 4, 3, 3, 1}, 2) ==
          std::vector<Cell>{{3, 0}, {3, 1}, {3, 2}, {4, 0}});
    CHECK_THROWS_AS(removed_hook(Partition{4, 4, 3, 3, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(removed_hook(Partition{4, 4, 3, 3, 1}, 3), std::invalid_argument);
}

TEST_CASE("proper intersection is hook disjointness, decided by corner distance") {
    CHECK_FALSE(components_intersect_properly(Partition{4, 4, 3, 3, 1}, 1, 2));
    CHECK_THROWS_AS(components_intersect_properly(Partition{4, 4, 3, 3, 1}, 1, 1),
                    std::invalid_argument);

    for (const auto& p : partitions_in_box({6, 6})) {
        if (p.empty()) continue;
        const auto n = singular_components(p).size();
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                const bool proper = components_intersect_properly(p, i, j);
                CHECK(proper == (i > j + 1 || j > i + 1));
                // adjacent hooks share exactly one cell: the corner of the lower one
                if (!proper) {
                    const auto hi = removed_hook(p, std::min(i, j));
                    const auto hj = removed_hook(p, std::max(i, j));
                    std::vector<Cell> shared;
                    std::set_intersection(hi.begin(), hi.end(), hj.begin(), hj.end(),
                                          std::back_inserter(shared));
                    CHECK(shared.size() == 1);
                }
            }
    }
}

TEST_CASE("closed-form intersection equals the fold over components") {
    for (const auto& p : partitions_in_box({6, 6})) {
        const auto comps = p.empty() ? std::vector<Partition>{} : singular_components(p);
        if (comps.empty()) continue;
        Partition fold = comps[0];
        for (std::size_t i = 1; i < comps.size(); ++i) fold = intersect(fold, comps[i]);
        CHECK(singular_intersection(p) == fold);
    }
}

TEST_CASE("transpose duality of the singular locus") {
    for (const auto& p : partitions_in_box({6, 6})) {
        if (p.empty()) continue;
        const auto comps = singular_components(p);
        const auto comps_t = singular_components(transpose(p));
        REQUIRE(comps.size() == comps_t.size());
        for (std::size_t i = 1; i <= comps.size(); ++i)
            CHECK(comps_t[i - 1] == transpose(comps[comps.size() - i]));
        if (!comps.empty())
            CHECK(singular_intersection(transpose(p)) == transpose(singular_intersection(p)));
    }
}

TEST_CASE("extreme components rebuild the partition exactly when their hooks are disjoint") {
    // join of the two extremes: for r >= 4 the deleted hooks are disjoint
    // and the join restores everything; at r = 3 the hooks are adjacent, so
    // exactly their one shared cell stays missing.  r = 3 therefore always
    // fails reconstruction, and the failure is exactly one cell.
    for (const auto& p : partitions_in_box({6, 6})) {
        if (p.empty()) continue;
        const auto r = rect_decomposition(p).rectangle_count();
        if (r < 3) continue;
        const auto comps = singular_components(p);
        const auto joined = unite(comps.front(), comps.back());
        if (r >= 4) {
            CHECK(joined == p);
        } else {
            CHECK(contains(p, joined));
            CHECK(joined.size() == p.size() - 1);
        }
    }
}

TEST_CASE("components interleave strictly between the intersection and the partition") {
    for (const auto& p : partitions_in_box({5, 5})) {
        if (p.empty() || is_smooth(p)) continue;
        const auto z = singular_intersection(p);
        for (const auto& c : singular_components(p)) {
            CHECK(contains(p, c));
            CHECK(contains(c, z));
            CHECK(c != p);
        }
    }
}
