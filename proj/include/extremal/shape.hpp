#pragma once

#include "extremal/geometry.hpp"

#include <cstddef>
#include <span>

namespace extremal {

/// Squared circumradius and squared distance from the circumcenter to the
/// nearest facet hyperplane (within the affine hull of the simplex).
struct SimplexShape {
    double r2 = 0.0;
    double d2 = 0.0;
};
SimplexShape simplex_shape(std::span<const Vector> points, const Tolerance& tol = {});

/// For the pyramid with apex points[apex] and base Q = the other points:
/// h2 = squared distance of the apex from aff Q, d2 = squared distance of the
/// circumcenter of all points from aff Q.
struct PyramidShape {
    double h2 = 0.0;
    double d2 = 0.0;
};
PyramidShape pyramid_shape(std::span<const Vector> points, std::size_t apex,
                           const Tolerance& tol = {});

/// Distance of a from the bisector hyperplane of b and c.
double bisector_distance(const Vector& a, const Vector& b, const Vector& c);

/// Least-squares slope of log(y) against log(x). Requires positive entries.
double log_log_slope(std::span<const double> x, std::span<const double> y);

} // namespace extremal
