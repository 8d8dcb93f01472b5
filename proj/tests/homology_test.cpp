#include "extremal/complexgen.hpp"
#include "extremal/errors.hpp"
#include "extremal/homology.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace extremal;

FilteredEntry entry(std::vector<std::size_t> v, double value) {
    return FilteredEntry{{Simplex{std::move(v)}, std::nullopt}, value};
}

FilteredComplex hollow_triangle_then_filled() {
    return make_filtration({entry({0}, 0), entry({1}, 0), entry({2}, 0), entry({0, 1}, 1),
                            entry({1, 2}, 1), entry({0, 2}, 1), entry({0, 1, 2}, 2)});
}

TEST(Reduce, SingleVertex) {
    auto fc = make_filtration({entry({0}, 0)});
    auto pd = reduce(fc, false);
    ASSERT_EQ(pd.pairs.size(), 1u);
    EXPECT_TRUE(pd.pairs[0].essential());
    EXPECT_EQ(betti_at(pd, 0, 0.0), 1);
    EXPECT_EQ(betti_at(reduce(fc, true), 0, 0.0), 0);
}

TEST(Reduce, TriangleCycleIsBornAndKilled) {
    auto fc = hollow_triangle_then_filled();
    auto pd = reduce(fc, true);
    EXPECT_EQ(betti_numbers(pd, 2, 0.5), (std::vector<int>{2, 0, 0}));
    EXPECT_EQ(betti_numbers(pd, 2, 1.0), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(betti_numbers(pd, 2, 2.0), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(pd.essential_count(), 1u);
    // Every simplex appears in exactly one pair.
    EXPECT_EQ(pd.finite_count() * 2 + pd.essential_count(), fc.size());
}

TEST(Reduce, HollowTetrahedronHasOneVoid) {
    std::vector<FilteredEntry> e;
    for (std::size_t a = 0; a < 4; ++a) e.push_back(entry({a}, 0));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) e.push_back(entry({a, b}, 1));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            for (std::size_t c = b + 1; c < 4; ++c) e.push_back(entry({a, b, c}, 2));
    auto fc = make_filtration(e);
    auto pd = reduce(fc);
    EXPECT_EQ(betti_numbers(pd, 3, 2.0), (std::vector<int>{0, 0, 1, 0}));
    EXPECT_EQ(betti_by_rank(fc, 2.0), (std::vector<int>{0, 0, 1}));
}

TEST(Reduce, RejectsUnsortedInput) {
    FilteredComplex fc;
    fc.entries = {entry({0, 1}, 0), entry({0}, 0), entry({1}, 0)};
    EXPECT_THROW(reduce(fc), OrderingViolation);
}

TEST(Betti, ToleranceIncludesValuesJustAbove) {
    auto fc = hollow_triangle_then_filled();
    auto pd = reduce(fc);
    Tolerance tol;
    EXPECT_EQ(betti_at(pd, 1, 1.0 - 0.5 * tol.abs_eps, tol), 1);
    EXPECT_EQ(betti_at(pd, 1, 1.0 - 10 * tol.abs_eps, tol), 0);
}

TEST(Betti, RankAgreesWithDiagramOnConstructions) {
    for (auto ps : {build_3d(3, 0.01), build_even(2, 5), build_odd(2, 2, 0.01)}) {
        auto fc = build_filtration(ps);
        auto pd = reduce(fc);
        for (const auto& t : pick_thresholds(fc)) {
            auto a = betti_numbers(pd, fc.max_dim(), t.rho);
            auto b = betti_by_rank(fc, t.rho);
            EXPECT_EQ(a, b) << to_string(ps.kind) << " rho=" << t.rho;
            EXPECT_EQ(betti_of_subcomplex(fc, pd, t.rho), b);
        }
    }
}

TEST(Euler, IdentityHoldsOnConstructions) {
    for (auto ps : {build_3d(4, 0.01), build_even(2, 6), build_odd(2, 2, 0.01)}) {
        auto fc = build_filtration(ps);
        EXPECT_FALSE(euler_mismatch(fc, reduce(fc, false)).has_value());
        EXPECT_FALSE(euler_mismatch(fc, reduce(fc, true)).has_value());
    }
}

TEST(Shuffle, DiagramInvariantWithinGroups) {
    auto ps = build_even(2, 5);
    auto fc = build_filtration(ps);
    auto pd = reduce(fc);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        auto shuffled = shuffle_within_groups(fc, rng);
        EXPECT_NO_THROW(check_face_order(shuffled));
        EXPECT_TRUE(same_diagram(pd, reduce(shuffled)));
    }
}

TEST(Shuffle, SameDiagramDetectsDifferences) {
    auto fc = hollow_triangle_then_filled();
    auto a = reduce(fc);
    auto b = a;
    b.pairs.back().death = 3.0;
    EXPECT_FALSE(same_diagram(a, b));
}

TEST(ThreeD, ExactBettiNumbers) {
    for (int n : {2, 3, 4}) {
        auto ps = build_3d(n, auto_delta(n));
        auto fc = build_filtration(ps);
        auto pd = reduce(fc);
        auto ts = pick_thresholds(fc);
        auto r1 = threshold_after(ts, {1, -1});
        auto r2 = threshold_after(ts, {1, 0});
        ASSERT_TRUE(r1 && r2);
        EXPECT_EQ(betti_at(pd, 1, r1->rho), (n + 1) * (n + 1) - 1);
        EXPECT_EQ(betti_at(pd, 2, r2->rho), n * n);
    }
}

} // namespace
