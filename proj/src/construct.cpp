#include "extremal/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace extremal {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

// Angle of point `index` on a cut arc spanning [-half_angle, half_angle] in n steps.
double arc_angle(double half_angle, int index, int n) {
    return -half_angle + 2.0 * half_angle * static_cast<double>(index) / static_cast<double>(n);
}

Vector even_point(int k, int n, int circle, int index) {
    Vector p = Vector::Zero(2 * k);
    const double t = 2.0 * std::numbers::pi * static_cast<double>(index) / static_cast<double>(n);
    p(2 * circle) = kHalfSqrt2 * std::cos(t);
    p(2 * circle + 1) = kHalfSqrt2 * std::sin(t);
    return p;
}

Vector three_d_point(int n, double delta, int circle, int index) {
    const double phi = arc_angle(std::asin(delta), index, n);
    // Circle 0 (C_z): center (-1/2, 0, 0) in the xy-plane; circle 1 (C_y): center
    // (1/2, 0, 0) in the xz-plane.
    if (circle == 0) return Vector{{-0.5 + std::cos(phi), std::sin(phi), 0.0}};
    return Vector{{0.5 - std::cos(phi), 0.0, std::sin(phi)}};
}

Vector odd_point(int k, int n, double delta, int circle, int index) {
    const auto u = regular_simplex_vertices(k);
    const double height = std::sqrt(regular_simplex(k).h2);
    const Eigen::VectorXd ul = u.row(circle).transpose();
    const Eigen::VectorXd vl = -ul / static_cast<double>(k);
    const Eigen::VectorXd w = (ul - vl) / height;
    const double theta = arc_angle(std::asin(delta / height), index, n);
    Vector p = Vector::Zero(2 * k + 1);
    p.head(k) = vl + height * std::cos(theta) * w;
    p(k + circle) = height * std::sin(theta);
    return p;
}

} // namespace

std::string_view to_string(Kind kind) {
    switch (kind) {
    case Kind::Even: return "even";
    case Kind::ThreeD: return "3d";
    case Kind::Odd: return "odd";
    case Kind::Suspended: return "suspended";
    }
    return "?";
}

Kind parse_kind(std::string_view name) {
    if (name == "even") return Kind::Even;
    if (name == "3d") return Kind::ThreeD;
    if (name == "odd") return Kind::Odd;
    if (name == "suspended") return Kind::Suspended;
    throw InvalidArgument("unknown point-set kind '" + std::string(name) + "'");
}

int PointSet::circle_count() const {
    switch (kind) {
    case Kind::Even: return k;
    case Kind::ThreeD: return 2;
    case Kind::Odd: return k + 1;
    case Kind::Suspended: return k;
    }
    return 0;
}

int PointSet::points_per_circle() const { return kind == Kind::Even ? n : n + 1; }

RegularSimplex regular_simplex(int k) {
    RegularSimplex r;
    const double kk = static_cast<double>(k);
    r.r2 = kk / (2.0 * (kk + 1.0));
    if (k > 0) {
        r.h2 = (kk + 1.0) / (2.0 * kk);
        r.d2 = 1.0 / (2.0 * kk * (kk + 1.0));
    }
    return r;
}

Eigen::MatrixXd regular_simplex_vertices(int k) {
    // Vertices e_l / sqrt(2) of the standard simplex in R^{k+1}, expressed in the
    // Helmert basis of the hyperplane sum(x) = 0. Column j of the basis is
    // (1, ..., 1, -j, 0, ...) / sqrt(j(j+1)) with j leading ones.
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(k + 1, k);
    for (int j = 1; j <= k; ++j) {
        const double norm = std::sqrt(static_cast<double>(j) * (j + 1));
        for (int l = 0; l <= k; ++l) {
            double entry = 0.0;
            if (l < j) entry = 1.0;
            else if (l == j) entry = -static_cast<double>(j);
            u(l, j - 1) = entry / norm * kHalfSqrt2;
        }
    }
    return u;
}

int min_n(int k) {
    require(k >= 1, "min_n: k must be >= 1");
    // k sin^2(pi/n) < 1, with exact ties (k=2,n=4; k=4,n=6; ...) treated as failures.
    for (int n = 3;; ++n) {
        const double s = std::sin(std::numbers::pi / n);
        if (k * s * s < 1.0 - 1e-12) return n;
    }
}

PointSet build_even(int k, int n) {
    require(k >= 1, "build_even: k must be >= 1");
    require(n >= 3, "build_even: n must be >= 3");
    PointSet ps;
    ps.kind = Kind::Even;
    ps.dim = 2 * k;
    ps.k = k;
    ps.n = n;
    for (int c = 0; c < k; ++c) {
        for (int t = 0; t < n; ++t) {
            ps.points.push_back(even_point(k, n, c, t));
            ps.labels.push_back({c, t});
        }
    }
    return ps;
}

PointSet build_3d(int n, double delta) {
    require(n >= 2, "build_3d: n must be >= 2");
    require(delta > 0.0 && delta < 1.0, "build_3d: delta must lie in (0, 1)");
    PointSet ps;
    ps.kind = Kind::ThreeD;
    ps.dim = 3;
    ps.k = 1;
    ps.n = n;
    ps.delta = delta;
    for (int c = 0; c < 2; ++c) {
        for (int i = 0; i <= n; ++i) {
            ps.points.push_back(three_d_point(n, delta, c, i));
            ps.labels.push_back({c, i});
        }
    }
    return ps;
}

PointSet build_odd(int k, int n, double delta) {
    require(k >= 1, "build_odd: k must be >= 1");
    require(n >= 2, "build_odd: n must be >= 2");
    require(delta > 0.0 && delta < std::sqrt(regular_simplex(k).h2),
            "build_odd: delta must lie in (0, H_k)");
    PointSet ps;
    ps.kind = Kind::Odd;
    ps.dim = 2 * k + 1;
    ps.k = k;
    ps.n = n;
    ps.delta = delta;
    for (int c = 0; c <= k; ++c) {
        for (int i = 0; i <= n; ++i) {
            ps.points.push_back(odd_point(k, n, delta, c, i));
            ps.labels.push_back({c, i});
        }
    }
    return ps;
}

PointSet build_suspended(int k, int n, double delta, double h) {
    require(k >= 2, "build_suspended: k must be >= 2");
    require(h > 0.0 && std::isfinite(h), "build_suspended: h must be positive");
    const auto base = build_odd(k - 1, n, delta);
    PointSet ps;
    ps.kind = Kind::Suspended;
    ps.dim = 2 * k;
    ps.k = k;
    ps.n = n;
    ps.delta = delta;
    ps.h = h;
    ps.labels = base.labels;
    for (const auto& p : base.points) {
        Vector q = Vector::Zero(ps.dim);
        q.head(base.dim) = p;
        ps.points.push_back(q);
    }
    for (int side = 0; side < 2; ++side) {
        ps.apex_ids.push_back(ps.points.size());
        ps.points.push_back(point_from_label(ps, {kApexCircle, side}));
        ps.labels.push_back({kApexCircle, side});
    }
    return ps;
}

Vector point_from_label(const PointSet& ps, const PointLabel& label) {
    switch (ps.kind) {
    case Kind::Even: return even_point(ps.k, ps.n, label.circle, label.index);
    case Kind::ThreeD: return three_d_point(ps.n, ps.delta, label.circle, label.index);
    case Kind::Odd: return odd_point(ps.k, ps.n, ps.delta, label.circle, label.index);
    case Kind::Suspended: {
        Vector q = Vector::Zero(ps.dim);
        if (label.circle == kApexCircle) {
            q(ps.dim - 1) = label.index == 0 ? ps.h : -ps.h;
        } else {
            q.head(ps.dim - 1) = odd_point(ps.k - 1, ps.n, ps.delta, label.circle, label.index);
        }
        return q;
    }
    }
    throw InvalidArgument("point_from_label: unknown kind");
}

double half_edge(const PointSet& ps) {
    return 0.5 * std::sqrt(squared_distance(point_from_label(ps, {0, 0}),
                                            point_from_label(ps, {0, 1})));
}

ConstructionScales scales(const PointSet& ps) {
    ConstructionScales sc;
    const double half = half_edge(ps);
    if (ps.kind == Kind::Even) {
        sc.s = half;
        sc.simplex = regular_simplex(ps.k);
    } else {
        sc.eps = half;
        sc.simplex = regular_simplex(ps.kind == Kind::Suspended ? ps.k - 1 : ps.k);
    }
    return sc;
}

double auto_delta(int n) { return std::min(1e-2, 1e-1 / static_cast<double>(n)); }

} // namespace extremal
