#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <schubert/deciders.hpp>
#include <schubert/enumerate.hpp>

using namespace schubert;

TEST_CASE("schubert isomorphism is equality up to transpose") {
    CHECK(schubert_isomorphic(Partition{3, 1}, Partition{3, 1}));
    CHECK(schubert_isomorphic(Partition{3, 1}, Partition{2, 1, 1}));
    CHECK_FALSE(schubert_isomorphic(Partition{3, 1}, Partition{2, 2}));
    CHECK(schubert_isomorphic(Partition{}, Partition{}));
    CHECK(schubert_isomorphic(Partition{2, 1}, Partition{2, 1})); // self-transpose

    // equivalence relation on the 4x4 box
    const auto box = partitions_in_box({4, 4});
    for (const auto& a : box) {
        CHECK(schubert_isomorphic(a, a));
        for (const auto& b : box) {
            CHECK(schubert_isomorphic(a, b) == schubert_isomorphic(b, a));
            if (!schubert_isomorphic(a, b)) continue;
            for (const auto& c : box)
                if (schubert_isomorphic(b, c)) CHECK(schubert_isomorphic(a, c));
        }
    }
}

TEST_CASE("isomorphic pairs share every ladder invariant") {
    const auto box = partitions_in_box({5, 5});
    std::map<Partition, std::vector<Count>> counts;
    for (const auto& p : box) counts.emplace(p, subdiagram_counts(p));
    for (const auto& a : box)
        for (const auto& b : box) {
            if (!schubert_isomorphic(a, b)) continue;
            CHECK(a.size() == b.size());
            CHECK(counts.at(a) == counts.at(b));
            CHECK(rect_decomposition(a).rectangle_count() == rect_decomposition(b).rectangle_count());
            if (!a.empty()) {
                CHECK(xi(a) == xi(b));
                CHECK(semi_isomorphic(from_partitions({}, a), from_partitions({}, b)));
            }
        }
}

TEST_CASE("distinguishing reports") {
    SECTION("isomorphic pairs: rung 0 with the relation") {
        const auto eq = distinguish_schubert(Partition{3, 1}, Partition{3, 1});
        CHECK(eq.isomorphic);
        CHECK(eq.relation == "equal");
        CHECK(eq.rung == 0);
        const auto tr = distinguish_schubert(Partition{3, 1}, Partition{2, 1, 1});
        CHECK(tr.isomorphic);
        CHECK(tr.relation == "transpose");
    }
    SECTION("rung 1: different cell counts") {
        const auto rep = distinguish_schubert(Partition{3}, Partition{2});
        CHECK_FALSE(rep.isomorphic);
        CHECK(rep.rung == 1);
        CHECK(rep.witness.find("cell counts") != std::string::npos);
    }
    SECTION("rung 2: subdiagram counts separate (2,2) from (2,1,1)") {
        const auto rep = distinguish_schubert(Partition{2, 2}, Partition{2, 1, 1});
        CHECK_FALSE(rep.isomorphic);
        CHECK(rep.rung == 2);
        CHECK(rep.witness.find("size 3") != std::string::npos);
    }
    SECTION("rung 4: (4,1) vs (3,2) agree through rung 3") {
        // equal counts [1,1,2,2,2,1], equal rectangle counts (both 2), but
        // the singular components are the empty shape vs (1,1)
        CHECK(subdiagram_counts(Partition{4, 1}) == subdiagram_counts(Partition{3, 2}));
        const auto rep = distinguish_schubert(Partition{4, 1}, Partition{3, 2});
        CHECK_FALSE(rep.isomorphic);
        CHECK(rep.rung == 4);
        CHECK(rep.witness.find("0 vs 1") != std::string::npos);
    }
    SECTION("rung 5: (6,2) vs (5,3) need the extreme-component hooks") {
        CHECK(subdiagram_counts(Partition{6, 2}) == subdiagram_counts(Partition{5, 3}));
        const auto rep = distinguish_schubert(Partition{6, 2}, Partition{5, 3});
        CHECK_FALSE(rep.isomorphic);
        CHECK(rep.rung == 5);
        CHECK(rep.witness.find("hook lengths") != std::string::npos);
    }
    SECTION("every pair in a 4x4 box gets a consistent report") {
        const auto box = partitions_in_box({4, 4});
        for (const auto& a : box)
            for (const auto& b : box) {
                const auto rep = distinguish_schubert(a, b);
                CHECK(rep.isomorphic == schubert_isomorphic(a, b));
                if (rep.isomorphic) {
                    CHECK(rep.rung == 0);
                } else {
                    CHECK(rep.rung >= 1);
                    CHECK(rep.rung <= 7);
                    CHECK_FALSE(rep.trace.empty());
                    if (rep.rung < 7) CHECK_FALSE(rep.witness.empty());
                    // the verdict and the separating level are symmetric
                    CHECK(distinguish_schubert(b, a).rung == rep.rung);
                }
            }
    }
}

TEST_CASE("richardson reports") {
    const auto yes = richardson_sufficient(parse_skew("2,1"), parse_skew("2,2 / 1"));
    // straight (2,1) rotated half a turn is "2,2 / 1": matched via duality
    CHECK(yes.isomorphic);
    CHECK(yes.detail.find("semi-isomorphic") != std::string::npos);

    const auto no = richardson_sufficient(parse_skew("3"), parse_skew("1,1,1"));
    CHECK(no.isomorphic); // transposed shapes

    const auto unknown = richardson_sufficient(parse_skew("2,2"), parse_skew("2,1,1"));
    CHECK_FALSE(unknown.isomorphic);
    CHECK(unknown.detail.find("component classes differ") != std::string::npos);
    CHECK(unknown.detail.find("conjectured") != std::string::npos);

    const auto sizes = richardson_sufficient(parse_skew("2"), parse_skew("3"));
    CHECK_FALSE(sizes.isomorphic);
    CHECK(sizes.detail.find("cell counts differ") != std::string::npos);

    const auto comps = richardson_sufficient(parse_skew("2,1 / 1"), parse_skew("2"));
    CHECK_FALSE(comps.isomorphic);
    CHECK(comps.detail.find("component counts differ") != std::string::npos);

    // soundness against the matching oracle over all small pairs
    std::vector<SkewShape> shapes;
    for (std::int64_t n = 1; n <= 5; ++n)
        for (auto& s : skew_shapes_with_cells(n)) shapes.push_back(std::move(s));
    for (const auto& a : shapes)
        for (const auto& b : shapes)
            CHECK(richardson_sufficient(a, b).isomorphic == semi_isomorphic_by_matching(a, b));
}

TEST_CASE("richardson decisions restricted to straight shapes match the schubert decider") {
    const auto box = partitions_in_box({4, 4});
    for (const auto& a : box)
        for (const auto& b : box)
            CHECK(richardson_sufficient(from_partitions({}, a), from_partitions({}, b)).isomorphic ==
                  schubert_isomorphic(a, b));
}

TEST_CASE("invariant signatures") {
    const auto sig = invariant_signature(parse_skew("2,1"));
    CHECK(sig.cell_count == 3);
    CHECK(sig.component_classes.size() == 1);
    CHECK(sig.hook_profile == std::vector<std::int64_t>{3});
    CHECK(sig.ideal_counts == std::vector<Count>{Count(1), Count(1), Count(2), Count(1)});

    // signatures are constant on semi-isomorphism classes
    CHECK(invariant_signature(parse_skew("2,1")) == invariant_signature(parse_skew("2,2 / 1")));
    CHECK(invariant_signature(parse_skew("3")) == invariant_signature(parse_skew("1,1,1")));
    CHECK_FALSE(invariant_signature(parse_skew("2,2")) == invariant_signature(parse_skew("2,1,1")));

    // disconnected shape: ideal counts multiply component-wise
    const auto two = invariant_signature(parse_skew("2,1 / 1")); // two separated cells
    CHECK(two.cell_count == 2);
    CHECK(two.component_classes.size() == 2);
    CHECK(two.ideal_counts == std::vector<Count>{Count(1), Count(2), Count(1)});
}
