#include "extremal/complexgen.hpp"
#include "extremal/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

namespace {

using namespace extremal;

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Simplex sx(std::vector<std::size_t> v) { return Simplex{std::move(v)}; }

TEST(Simplex, FacetsDropOneVertexEach) {
    auto f = sx({1, 4, 7}).facets();
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].vertices, (std::vector<std::size_t>{4, 7}));
    EXPECT_EQ(f[2].vertices, (std::vector<std::size_t>{1, 4}));
    EXPECT_TRUE(sx({3}).facets().empty());
}

TEST(Enumerate, EvenCellCount) {
    for (auto [k, n] : {std::pair{1, 3}, {2, 5}, {2, 7}, {3, 6}}) {
        auto ps = build_even(k, n);
        EXPECT_EQ(enumerate(ps).size(), ipow(1 + 2 * n, k) - 1) << "k=" << k << " n=" << n;
    }
}

TEST(Enumerate, OddCellCount) {
    for (auto [k, n] : {std::pair{1, 2}, {1, 5}, {2, 2}, {2, 3}}) {
        auto ps = build_odd(k, n, 0.01);
        EXPECT_EQ(enumerate(ps).size(), ipow(2 * n + 2, k + 1) - 1) << "k=" << k << " n=" << n;
    }
    EXPECT_EQ(enumerate(build_3d(4, 0.01)).size(), ipow(10, 2) - 1);
}

TEST(Enumerate, SortedDistinctAndClosed) {
    auto ps = build_odd(2, 2, 0.01);
    auto cells = enumerate(ps);
    std::set<Simplex> seen;
    for (const auto& c : cells) {
        EXPECT_TRUE(std::is_sorted(c.simplex.vertices.begin(), c.simplex.vertices.end()));
        EXPECT_TRUE(seen.insert(c.simplex).second);
    }
    for (const auto& c : cells)
        for (const auto& f : c.simplex.facets()) EXPECT_TRUE(seen.count(f));
}

TEST(Enumerate, SuspendedIsRejected) {
    EXPECT_THROW(enumerate(build_suspended(2, 2, 0.01, 0.5)), InvalidArgument);
    EXPECT_THROW(enumerate_even(build_3d(2, 0.01)), InvalidArgument);
}

TEST(Classify, TouchAndShortCounts) {
    auto ps = build_even(2, 5); // circle 0: ids 0..4, circle 1: ids 5..9
    auto c = classify(ps, sx({0, 1, 5}));
    ASSERT_TRUE(c.cls);
    EXPECT_EQ(*c.cls, (SimplexClass{1, 0}));
    EXPECT_EQ(*classify(ps, sx({0, 4})).cls, (SimplexClass{0, 0})); // wraps around
    EXPECT_EQ(*classify(ps, sx({2, 7})).cls, (SimplexClass{1, -1}));
    EXPECT_EQ(to_string(SimplexClass{1, -1}), "(1,-1)");
}

TEST(Classify, OpenChainsDoNotWrap) {
    auto ps = build_3d(3, 0.01); // circle 0: ids 0..3
    EXPECT_THROW(classify(ps, sx({0, 3})), InvalidSimplex);
}

TEST(Classify, Errors) {
    auto ps = build_even(2, 5);
    EXPECT_THROW(classify(ps, sx({})), InvalidSimplex);
    EXPECT_THROW(classify(ps, sx({0, 1, 2})), InvalidSimplex);
    EXPECT_THROW(classify(ps, sx({0, 2})), InvalidSimplex);
    EXPECT_THROW(classify(ps, sx({1, 0})), InvalidSimplex);
    EXPECT_THROW(classify(ps, sx({0, 99})), InvalidSimplex);
}

TEST(Filtration, FaceOrderAndCensus) {
    auto ps = build_3d(3, 0.01);
    auto fc = build_filtration(ps);
    EXPECT_NO_THROW(check_face_order(fc));
    auto census = fc.census();
    ASSERT_EQ(census.size(), 4u);
    EXPECT_EQ(census[0], 8u);
    EXPECT_EQ(census[1], 6u + 16u);
    EXPECT_EQ(census[2], 24u);
    EXPECT_EQ(census[3], 9u);
    EXPECT_EQ(fc.max_dim(), 3);
}

TEST(Filtration, MissingFaceIsRejected) {
    std::vector<FilteredEntry> entries;
    entries.push_back({{sx({0}), std::nullopt}, 0.0});
    entries.push_back({{sx({0, 1}), std::nullopt}, 1.0});
    EXPECT_THROW(make_filtration(entries), OrderingViolation);
}

TEST(Filtration, LateFaceIsRejected) {
    FilteredComplex fc;
    fc.entries.push_back({{sx({0}), std::nullopt}, 0.0});
    fc.entries.push_back({{sx({0, 1}), std::nullopt}, 0.5});
    fc.entries.push_back({{sx({1}), std::nullopt}, 1.0});
    EXPECT_THROW(check_face_order(fc), OrderingViolation);
}

TEST(Filtration, EvenValuesMatchClosedForms) {
    auto ps = build_even(2, 6);
    auto fc = build_filtration(ps);
    for (const auto& e : fc.entries)
        if (*e.cell.cls == SimplexClass{1, -1}) EXPECT_NEAR(e.value, 0.5, 1e-14);
}

TEST(Filtration, RepairLiftsRoundingOnly) {
    std::vector<FilteredEntry> e = {{{sx({0}), std::nullopt}, 0.0},
                                    {{sx({1}), std::nullopt}, 0.0},
                                    {{sx({2}), std::nullopt}, 0.0},
                                    {{sx({0, 1}), std::nullopt}, 0.5 + 1e-15},
                                    {{sx({0, 2}), std::nullopt}, 0.7},
                                    {{sx({0, 1, 2}), std::nullopt}, 0.5},
                                    {{sx({1, 2}), std::nullopt}, 0.1}};
    repair_monotonicity(e);
    EXPECT_EQ(e[5].value, 0.5); // 0.7 is a real gap, not rounding
    e[4].value = 0.2;
    repair_monotonicity(e);
    EXPECT_EQ(e[5].value, 0.5 + 1e-15);
    EXPECT_NO_THROW(make_filtration(e));
}

TEST(RadiusValue, NonEmptySphereThrows) {
    auto ps = build_3d(3, 0.9);
    bool threw = false;
    for (const auto& c : enumerate(ps)) {
        try {
            radius_value(ps, c.simplex);
        } catch (const NotCritical&) {
            threw = true;
        }
    }
    EXPECT_TRUE(threw);
}

TEST(Thresholds, EvenClassesSeparate) {
    auto ps = build_even(2, 5);
    auto fc = build_filtration(ps);
    auto ranges = class_ranges(fc);
    ASSERT_EQ(ranges.size(), 5u);
    for (std::size_t i = 1; i < ranges.size(); ++i) {
        EXPECT_LT(ranges[i - 1].cls, ranges[i].cls);
        EXPECT_LT(ranges[i - 1].max_value, ranges[i].min_value);
    }
    auto ts = pick_thresholds(fc);
    ASSERT_EQ(ts.size(), 4u);
    for (const auto& t : ts) {
        EXPECT_GT(t.gap, 0.0);
        EXPECT_GT(t.rho, 0.0);
    }
    auto t = threshold_after(ts, {1, -1});
    ASSERT_TRUE(t);
    EXPECT_EQ(t->above, (SimplexClass{1, 0}));
    EXPECT_FALSE(threshold_after(ts, {1, 1}));
}

TEST(Thresholds, LargeDeltaOverlaps) {
    auto ps = build_3d(3, 0.5);
    FiltrationOptions opt;
    opt.assert_empty = false;
    auto fc = build_filtration(ps, opt);
    EXPECT_THROW(pick_thresholds(fc), Overlap);
}

TEST(Criticality, AcceptedConstructionsPass) {
    auto ps = build_odd(2, 2, 0.01);
    auto fc = build_filtration(ps);
    auto report = criticality_check(ps, fc);
    EXPECT_EQ(report.checked, fc.size());
    EXPECT_TRUE(report.ok());
}

TEST(Criticality, LargeDeltaFails) {
    auto ps = build_3d(3, 0.9);
    auto cells = enumerate(ps);
    EXPECT_EQ(criticality_check(ps, cells).failures.size(), 16u);
    // At delta = 0.5 the mosaic is still fully critical; only the class ranges overlap.
    auto half = build_3d(3, 0.5);
    EXPECT_TRUE(criticality_check(half, enumerate(half)).ok());
}

TEST(Filtration, ParallelBuildIsDeterministic) {
    auto ps = build_odd(2, 3, 0.01);
    auto a = build_filtration(ps);
    auto b = build_filtration(ps);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a.entries[i].cell.simplex, b.entries[i].cell.simplex);
        EXPECT_EQ(a.entries[i].value, b.entries[i].value);
    }
}

} // namespace
