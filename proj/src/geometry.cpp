#include "extremal/geometry.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <string>

namespace extremal {

namespace {

// Column-pivoted QR of the edge matrix [p_1 - p_0, ..., p_m - p_0]. Rank is
// judged relative to the largest pivot so that short edges (a few 1e-4 next
// to unit edges) still count as independent directions.
constexpr double kRankThreshold = 1e-11;

struct EdgeFactorization {
    Eigen::MatrixXd edges;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
    bool full_rank = true;
};

EdgeFactorization factor_edges(std::span<const Vector> points) {
    const auto m = static_cast<Eigen::Index>(points.size()) - 1;
    const auto d = points.front().size();
    EdgeFactorization f;
    f.edges.resize(d, m);
    for (Eigen::Index i = 0; i < m; ++i) f.edges.col(i) = points[i + 1] - points[0];
    if (m == 0) return f;
    if (m > d) {
        f.full_rank = false;
        return f;
    }
    f.qr.compute(f.edges);
    const auto& r = f.qr.matrixQR();
    const double top = std::abs(r(0, 0));
    if (top == 0.0) {
        f.full_rank = false;
        return f;
    }
    for (Eigen::Index i = 0; i < m; ++i) {
        if (std::abs(r(i, i)) <= kRankThreshold * top) {
            f.full_rank = false;
            break;
        }
    }
    return f;
}

void check_dims(std::span<const Vector> points) {
    if (points.empty()) throw InvalidArgument("geometry: empty point list");
    const auto d = points.front().size();
    for (const auto& p : points) {
        if (p.size() != d) throw DimensionMismatch("geometry: points of differing dimension");
    }
}

// Circumsphere of a support set inside the move-to-front recursion. Supports
// are affinely independent unless the input is degenerate, in which case the
// error propagates.
Sphere support_ball(const std::vector<const Vector*>& support, Eigen::Index dim) {
    if (support.empty()) return Sphere{Vector::Zero(dim), -1.0};
    std::vector<Vector> pts;
    pts.reserve(support.size());
    for (const auto* p : support) pts.push_back(*p);
    return circumsphere(pts);
}

bool contains(const Sphere& s, const Vector& p, const Tolerance& tol) {
    if (s.radius < 0) return false;
    return (p - s.center).norm() <= s.radius + tol.abs_eps;
}

void mtf_ball(std::list<const Vector*>& pts, std::list<const Vector*>::iterator end,
              std::vector<const Vector*>& support, Sphere& ball, Eigen::Index dim,
              const Tolerance& tol) {
    ball = support_ball(support, dim);
    if (static_cast<Eigen::Index>(support.size()) == dim + 1) return;
    for (auto it = pts.begin(); it != end;) {
        auto current = it++;
        if (!contains(ball, **current, tol)) {
            support.push_back(*current);
            mtf_ball(pts, current, support, ball, dim, tol);
            support.pop_back();
            pts.splice(pts.begin(), pts, current);
        }
    }
}

} // namespace

void Tolerance::validate() const {
    if (!(abs_eps > 0 && rel_eps > 0 && interior_eps > 0))
        throw InvalidArgument("tolerance entries must be strictly positive");
    if (abs_eps > rel_eps) throw InvalidArgument("tolerance requires abs_eps <= rel_eps");
}

double squared_distance(const Vector& a, const Vector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("squared_distance: dimensions " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    return (a - b).squaredNorm();
}

Sphere min_enclosing_ball(std::span<const Vector> points, const Tolerance& tol) {
    check_dims(points);
    const auto dim = points.front().size();
    // A circumcenter inside the convex hull makes the circumsphere the miniball.
    if (static_cast<Eigen::Index>(points.size()) <= dim + 1) {
        try {
            auto s = circumsphere(points, tol);
            if (points.size() == 1 || barycentric_coordinates(points, s.center, tol).minCoeff() >= 0.0)
                return s;
        } catch (const Error&) {
        }
    }
    std::list<const Vector*> pts;
    for (const auto& p : points) pts.push_back(&p);
    std::vector<const Vector*> support;
    Sphere ball;
    mtf_ball(pts, pts.end(), support, ball, dim, tol);
    return ball;
}

Sphere circumsphere(std::span<const Vector> points, const Tolerance& tol) {
    check_dims(points);
    if (points.size() == 1) return Sphere{points.front(), 0.0};
    auto f = factor_edges(points);
    if (!f.full_rank) throw AffineDegeneracy("circumsphere: affinely dependent points");

    // Center offset c lies in the column space Q; (p_i - p_0) . c = |p_i - p_0|^2 / 2
    // becomes R^T y = P^T b with c = Q y.
    const auto m = f.edges.cols();
    Eigen::VectorXd rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) rhs(i) = 0.5 * f.edges.col(i).squaredNorm();
    const Eigen::VectorXd permuted = f.qr.colsPermutation().transpose() * rhs;
    const auto r = f.qr.matrixQR().topLeftCorner(m, m).triangularView<Eigen::Upper>();
    const Eigen::VectorXd y = r.transpose().solve(permuted);
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(f.edges.rows());
    padded.head(m) = y;
    const Vector offset = f.qr.householderQ() * padded;

    Sphere s{points[0] + offset, offset.norm()};
    for (const auto& p : points) {
        const double dist = (p - s.center).norm();
        if (std::abs(dist - s.radius) > tol.rel_eps * std::max(1.0, s.radius))
            throw AffineDegeneracy("circumsphere: ill-conditioned support");
    }
    return s;
}

Eigen::VectorXd barycentric_coordinates(std::span<const Vector> simplex_points, const Vector& x,
                                        const Tolerance& tol) {
    check_dims(simplex_points);
    if (x.size() != simplex_points.front().size())
        throw DimensionMismatch("barycentric_coordinates: query dimension");
    const auto count = static_cast<Eigen::Index>(simplex_points.size());
    Eigen::VectorXd lambda(count);
    double diameter = 0.0;
    for (const auto& p : simplex_points)
        for (const auto& q : simplex_points) diameter = std::max(diameter, (p - q).norm());

    if (count == 1) {
        if ((x - simplex_points[0]).norm() > tol.rel_eps * std::max(1.0, diameter))
            throw NotInAffineHull("barycentric_coordinates: point differs from the vertex");
        lambda(0) = 1.0;
        return lambda;
    }
    auto f = factor_edges(simplex_points);
    if (!f.full_rank) throw AffineDegeneracy("barycentric_coordinates: degenerate simplex");
    const Vector rel = x - simplex_points[0];
    const Eigen::VectorXd mu = f.qr.solve(rel);
    const double residual = (f.edges * mu - rel).norm();
    if (residual > tol.rel_eps * std::max(diameter, tol.abs_eps))
        throw NotInAffineHull("barycentric_coordinates: point off the affine hull by " +
                              std::to_string(residual));
    lambda(0) = 1.0 - mu.sum();
    lambda.tail(count - 1) = mu;
    return lambda;
}

bool barycentric_interior(std::span<const Vector> simplex_points, const Vector& x,
                          const Tolerance& tol) {
    const auto lambda = barycentric_coordinates(simplex_points, x, tol);
    return lambda.minCoeff() > tol.interior_eps;
}

double distance_to_affine_hull(std::span<const Vector> points, const Vector& x) {
    check_dims(points);
    const Vector rel = x - points[0];
    if (points.size() == 1) return rel.norm();
    auto f = factor_edges(points);
    if (!f.full_rank) throw AffineDegeneracy("distance_to_affine_hull: degenerate points");
    const Eigen::VectorXd mu = f.qr.solve(rel);
    return (f.edges * mu - rel).norm();
}

std::optional<std::size_t> first_point_inside(const Sphere& s, std::span<const Vector> points,
                                              std::span<const std::size_t> exclude,
                                              Emptiness mode, const Tolerance& tol) {
    const double r2 = s.radius * s.radius;
    const double bound = mode == Emptiness::Strict ? r2 + tol.abs_eps : r2 - tol.abs_eps;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (std::binary_search(exclude.begin(), exclude.end(), i)) continue;
        if (squared_distance(points[i], s.center) < bound) return i;
    }
    return std::nullopt;
}

bool is_empty_sphere(const Sphere& s, std::span<const Vector> points,
                     std::span<const std::size_t> exclude, Emptiness mode, const Tolerance& tol) {
    return !first_point_inside(s, points, exclude, mode, tol).has_value();
}

std::vector<Vector> gather(std::span<const Vector> points, std::span<const std::size_t> ids) {
    std::vector<Vector> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(points[id]);
    return out;
}

} // namespace extremal
