#include "extremal/errors.hpp"
#include "extremal/shape.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace {

using namespace extremal;

Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

TEST(SimplexShape, EquilateralTriangle) {
    std::vector<Vector> t = {vec({0, 0}), vec({1, 0}), vec({0.5, std::sqrt(3.0) / 2})};
    auto s = simplex_shape(t);
    EXPECT_NEAR(s.r2, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(s.d2, 1.0 / 12.0, 1e-14);
}

TEST(SimplexShape, RightTriangleCenterOnHypotenuse) {
    std::vector<Vector> t = {vec({0, 0}), vec({2, 0}), vec({0, 2})};
    auto s = simplex_shape(t);
    EXPECT_NEAR(s.r2, 2.0, 1e-14);
    EXPECT_NEAR(s.d2, 0.0, 1e-14);
}

TEST(PyramidShape, TriangularPyramid) {
    // Base triangle in z = 0, apex above its circumcenter.
    std::vector<Vector> p = {vec({1, 0, 0}), vec({-0.5, std::sqrt(3.0) / 2, 0}),
                             vec({-0.5, -std::sqrt(3.0) / 2, 0}), vec({0, 0, 2})};
    auto s = pyramid_shape(p, 3);
    EXPECT_NEAR(s.h2, 4.0, 1e-14);
    // Circumcenter on the axis at z with 1 + z^2 = (2 - z)^2.
    EXPECT_NEAR(s.d2, 0.75 * 0.75, 1e-13);
}

TEST(Bisector, Distance) {
    EXPECT_NEAR(bisector_distance(vec({3, 7}), vec({0, 0}), vec({2, 0})), 2.0, 1e-14);
    EXPECT_NEAR(bisector_distance(vec({1, -4}), vec({0, 0}), vec({2, 0})), 0.0, 1e-14);
}

TEST(LogLogSlope, RecoversPowerLaw) {
    std::vector<double> x = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
    std::vector<double> y;
    for (double v : x) y.push_back(7.0 * std::pow(v, 3));
    EXPECT_NEAR(log_log_slope(x, y), 3.0, 1e-12);
    std::vector<double> bad = {1.0, 0.0, 1.0, 1.0};
    EXPECT_THROW(log_log_slope(x, bad), InvalidArgument);
}

} // namespace
