#include "extremal/errors.hpp"
#include "extremal/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

namespace {

using extremal::Sphere;
using extremal::Tolerance;
using extremal::Vector;

Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

std::vector<Vector> random_cloud(std::mt19937_64& rng, int count, int dim) {
    std::normal_distribution<double> g;
    std::vector<Vector> pts;
    for (int i = 0; i < count; ++i) {
        Vector v(dim);
        for (int j = 0; j < dim; ++j) v(j) = g(rng);
        pts.push_back(v);
    }
    return pts;
}

// Smallest circumsphere over all affinely independent subsets of size <= d+1
// that contains every point.
double brute_force_miniball_radius(const std::vector<Vector>& pts) {
    const int n = static_cast<int>(pts.size());
    const int dim = static_cast<int>(pts.front().size());
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > dim + 1) continue;
        std::vector<Vector> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(pts[i]);
        Sphere s;
        try {
            s = extremal::circumsphere(sub);
        } catch (const extremal::Error&) {
            continue;
        }
        bool covers = true;
        for (const auto& p : pts)
            if ((p - s.center).norm() > s.radius * (1 + 1e-9) + 1e-12) covers = false;
        if (covers) best = std::min(best, s.radius);
    }
    return best;
}

TEST(Tolerance, ValidateRejectsBadEntries) {
    Tolerance ok;
    EXPECT_NO_THROW(ok.validate());
    Tolerance neg;
    neg.abs_eps = -1;
    EXPECT_THROW(neg.validate(), extremal::InvalidArgument);
    Tolerance inverted;
    inverted.abs_eps = 1e-6;
    inverted.rel_eps = 1e-9;
    EXPECT_THROW(inverted.validate(), extremal::InvalidArgument);
}

TEST(Circumsphere, EquilateralTriangle) {
    std::vector<Vector> t = {vec({0, 0}), vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2})};
    auto s = extremal::circumsphere(t);
    EXPECT_NEAR(s.radius, 1.0 / std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(s.center(0), 0.5, 1e-14);
}

TEST(Circumsphere, EdgeInHigherDimension) {
    std::vector<Vector> e = {vec({1, 2, 3, 4}), vec({3, 2, 3, 4})};
    auto s = extremal::circumsphere(e);
    EXPECT_NEAR(s.radius, 1.0, 1e-14);
    EXPECT_NEAR(s.center(0), 2.0, 1e-14);
    EXPECT_NEAR(s.center(3), 4.0, 1e-14);
}

TEST(Circumsphere, RegularTetrahedronInR3) {
    std::vector<Vector> t = {vec({1, 1, 1}), vec({1, -1, -1}), vec({-1, 1, -1}), vec({-1, -1, 1})};
    auto s = extremal::circumsphere(t);
    EXPECT_NEAR(s.radius, std::sqrt(3.0), 1e-13);
    EXPECT_NEAR(s.center.norm(), 0.0, 1e-13);
}

TEST(Circumsphere, CollinearPointsThrow) {
    std::vector<Vector> c = {vec({0, 0}), vec({1, 1}), vec({2, 2})};
    EXPECT_THROW(extremal::circumsphere(c), extremal::AffineDegeneracy);
}

TEST(Circumsphere, DimensionMismatchThrows) {
    std::vector<Vector> c = {vec({0, 0}), vec({1, 1, 0})};
    EXPECT_THROW(extremal::circumsphere(c), extremal::DimensionMismatch);
}

TEST(Miniball, ObtuseTriangleUsesLongestEdge) {
    std::vector<Vector> t = {vec({0, 0}), vec({4, 0}), vec({2, 0.5})};
    auto s = extremal::min_enclosing_ball(t);
    EXPECT_NEAR(s.radius, 2.0, 1e-14);
}

TEST(Miniball, MatchesBruteForceOracle) {
    std::mt19937_64 rng(7);
    for (int dim = 1; dim <= 4; ++dim) {
        for (int trial = 0; trial < 20; ++trial) {
            auto pts = random_cloud(rng, 3 + trial % 6, dim);
            auto s = extremal::min_enclosing_ball(pts);
            EXPECT_NEAR(s.radius, brute_force_miniball_radius(pts), 1e-9)
                << "dim=" << dim << " trial=" << trial;
            for (const auto& p : pts) EXPECT_LE((p - s.center).norm(), s.radius + 1e-9);
        }
    }
}

TEST(Miniball, InvariantUnderRigidMotionAndOrder) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = random_cloud(rng, 8, 3);
        const double r = extremal::min_enclosing_ball(pts).radius;

        Eigen::MatrixXd m = Eigen::MatrixXd::Random(3, 3);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
        Eigen::MatrixXd q = qr.householderQ();
        Vector shift = vec({0.3, -2.0, 5.0});
        std::vector<Vector> moved;
        for (const auto& p : pts) moved.push_back(q * p + shift);
        std::shuffle(moved.begin(), moved.end(), rng);
        EXPECT_NEAR(extremal::min_enclosing_ball(moved).radius, r, 1e-10);
    }
}

TEST(Miniball, MonotoneUnderInclusion) {
    std::mt19937_64 rng(13);
    auto pts = random_cloud(rng, 12, 4);
    double prev = 0.0;
    for (std::size_t m = 1; m <= pts.size(); ++m) {
        std::vector<Vector> prefix(pts.begin(), pts.begin() + static_cast<long>(m));
        const double r = extremal::min_enclosing_ball(prefix).radius;
        EXPECT_GE(r, prev - 1e-12);
        prev = r;
    }
}

TEST(Barycentric, InteriorAndBoundary) {
    std::vector<Vector> t = {vec({0, 0}), vec({1, 0}), vec({0, 1})};
    auto b = extremal::barycentric_coordinates(t, vec({0.25, 0.25}));
    EXPECT_NEAR(b(0), 0.5, 1e-14);
    EXPECT_NEAR(b.sum(), 1.0, 1e-14);
    EXPECT_TRUE(extremal::barycentric_interior(t, vec({0.25, 0.25})));
    EXPECT_FALSE(extremal::barycentric_interior(t, vec({0.5, 0.0})));
    EXPECT_FALSE(extremal::barycentric_interior(t, vec({0.8, 0.8})));
}

TEST(Barycentric, OffHullThrows) {
    std::vector<Vector> e = {vec({0, 0, 0}), vec({1, 0, 0})};
    EXPECT_THROW(extremal::barycentric_coordinates(e, vec({0.5, 0.1, 0})),
                 extremal::NotInAffineHull);
}

TEST(AffineHull, Distance) {
    std::vector<Vector> plane = {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0})};
    EXPECT_NEAR(extremal::distance_to_affine_hull(plane, vec({3, -2, 0.75})), 0.75, 1e-14);
}

TEST(Emptiness, StrictAndRelaxedModes) {
    Sphere s{vec({0, 0}), 1.0};
    std::vector<Vector> pts = {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0.5, 0})};
    std::vector<std::size_t> support = {0, 1};
    // Point 2 lies exactly on the sphere: relaxed accepts, strict rejects.
    std::vector<Vector> on_sphere(pts.begin(), pts.begin() + 3);
    EXPECT_TRUE(extremal::is_empty_sphere(s, on_sphere, support, extremal::Emptiness::Relaxed));
    EXPECT_FALSE(extremal::is_empty_sphere(s, on_sphere, support, extremal::Emptiness::Strict));
    auto inside = extremal::first_point_inside(s, pts, support, extremal::Emptiness::Relaxed);
    ASSERT_TRUE(inside.has_value());
    EXPECT_EQ(*inside, 3u);
}

TEST(Gather, PicksIds) {
    std::vector<Vector> pts = {vec({0}), vec({1}), vec({2})};
    std::vector<std::size_t> ids = {2, 0};
    auto g = extremal::gather(pts, ids);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0](0), 2.0);
    EXPECT_EQ(g[1](0), 0.0);
}

} // namespace
