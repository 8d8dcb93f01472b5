#include "extremal/shape.hpp"

#include "extremal/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace extremal {

namespace {

std::vector<Vector> without(std::span<const Vector> points, std::size_t skip) {
    std::vector<Vector> out;
    out.reserve(points.size() - 1);
    for (std::size_t i = 0; i < points.size(); ++i)
        if (i != skip) out.push_back(points[i]);
    return out;
}

} // namespace

SimplexShape simplex_shape(std::span<const Vector> points, const Tolerance& tol) {
    if (points.size() < 2) throw InvalidArgument("simplex_shape: need at least two points");
    const auto sphere = circumsphere(points, tol);
    SimplexShape s;
    s.r2 = sphere.radius * sphere.radius;
    s.d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto facet = without(points, i);
        const double dist = distance_to_affine_hull(facet, sphere.center);
        s.d2 = std::min(s.d2, dist * dist);
    }
    return s;
}

PyramidShape pyramid_shape(std::span<const Vector> points, std::size_t apex,
                           const Tolerance& tol) {
    if (points.size() < 2 || apex >= points.size())
        throw InvalidArgument("pyramid_shape: bad apex or too few points");
    const auto base = without(points, apex);
    const auto sphere = circumsphere(points, tol);
    const double h = distance_to_affine_hull(base, points[apex]);
    const double d = distance_to_affine_hull(base, sphere.center);
    return {h * h, d * d};
}

double bisector_distance(const Vector& a, const Vector& b, const Vector& c) {
    const double bc = std::sqrt(squared_distance(b, c));
    if (bc == 0.0) throw AffineDegeneracy("bisector_distance: coincident endpoints");
    return std::abs(squared_distance(a, b) - squared_distance(a, c)) / (2.0 * bc);
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidArgument("log_log_slope: need two or more paired samples");
    double mx = 0.0, my = 0.0;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw InvalidArgument("log_log_slope: samples must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
        mx += lx.back();
        my += ly.back();
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    if (sxx == 0.0) throw InvalidArgument("log_log_slope: abscissae are identical");
    return sxy / sxx;
}

} // namespace extremal
