#pragma once

#include "extremal/errors.hpp"
#include "extremal/geometry.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

enum class Kind { Even, ThreeD, Odd, Suspended };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view name);

/// Position of a point in its construction. Apexes of the suspended set carry
/// circle == -1 and index 0 (upper) or 1 (lower).
struct PointLabel {
    int circle = 0;
    int index = 0;
    friend bool operator==(const PointLabel&, const PointLabel&) = default;
};

inline constexpr int kApexCircle = -1;

/// A labelled point cloud together with the parameters that produced it.
///
/// `k` follows the construction's own convention: the number of circles for
/// Even and Suspended sets, the number of circles minus one for Odd sets, and
/// 1 for the three-dimensional set.
struct PointSet {
    Kind kind = Kind::ThreeD;
    int dim = 0;
    int k = 0;
    int n = 0;
    double delta = 0.0;
    double h = 0.0;
    std::vector<Vector> points;
    std::vector<PointLabel> labels;
    std::vector<std::size_t> apex_ids;

    std::size_t size() const { return points.size(); }
    /// Number of circles carrying data points.
    int circle_count() const;
    /// Number of points on each circle.
    int points_per_circle() const;
    /// True when circle indices wrap around (closed polygons of the even set).
    bool cyclic() const { return kind == Kind::Even; }
};

/// Squared circumradius, height and in-radius gap of the regular unit-edge k-simplex.
struct RegularSimplex {
    double r2 = 0.0; ///< k / (2(k+1))
    double h2 = 0.0; ///< (k+1) / (2k), undefined for k = 0
    double d2 = 0.0; ///< 1 / (2k(k+1)), undefined for k = 0
};
RegularSimplex regular_simplex(int k);

struct ConstructionScales {
    double s = 0.0;   ///< half short edge of the even set
    double eps = 0.0; ///< half short edge of the 3-D and odd sets
    RegularSimplex simplex;
};
ConstructionScales scales(const PointSet& ps);

/// Smallest n whose inscribed regular n-gon (radius sqrt(2)/2) has edges strictly
/// shorter than sqrt(2/k).
int min_n(int k);

PointSet build_even(int k, int n);
PointSet build_3d(int n, double delta);
PointSet build_odd(int k, int n, double delta);
PointSet build_suspended(int k, int n, double delta, double h);

/// Recomputes the coordinates of a labelled point from the construction parameters.
Vector point_from_label(const PointSet& ps, const PointLabel& label);

/// Measured half-distance between two consecutive points on the first circle.
double half_edge(const PointSet& ps);

/// Vertex positions of the unit-edge regular k-simplex in R^k with barycenter at
/// the origin (row l is u_l).
Eigen::MatrixXd regular_simplex_vertices(int k);

// --- delta controller --------------------------------------------------------

inline constexpr int kMaxDeltaHalvings = 12;
inline constexpr double kDeltaFloor = 1e-4;

double auto_delta(int n);

template <class T>
struct DeltaSearch {
    T value;
    double delta;
    std::vector<std::string> rejected; ///< one diagnostic per discarded delta
};

/// Runs `attempt(delta)` from auto_delta(n) downward, halving on NotCritical or
/// Overlap, and stops at the floor. Throws ControllerExhausted when nothing passes.
template <class Attempt>
auto search_delta(int n, Attempt&& attempt) -> DeltaSearch<decltype(attempt(0.0))> {
    std::vector<std::string> rejected;
    double delta = auto_delta(n);
    for (int halvings = 0; halvings <= kMaxDeltaHalvings && delta >= kDeltaFloor; ++halvings) {
        try {
            return {attempt(delta), delta, std::move(rejected)};
        } catch (const NotCritical& e) {
            rejected.push_back("delta=" + std::to_string(delta) + ": " + e.what());
        } catch (const Overlap& e) {
            rejected.push_back("delta=" + std::to_string(delta) + ": " + e.what());
        }
        delta *= 0.5;
    }
    std::string msg = "delta controller exhausted for n=" + std::to_string(n);
    for (const auto& r : rejected) msg += "\n  " + r;
    throw ControllerExhausted(msg);
}

} // namespace extremal
