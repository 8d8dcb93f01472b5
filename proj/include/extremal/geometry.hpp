#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace extremal {

using Vector = Eigen::VectorXd;

struct Sphere {
    Vector center;
    double radius = 0.0;
};

/// Numerical tolerances shared by every geometric predicate.
///   abs_eps      absolute slack for containment and emptiness tests
///   rel_eps      relative slack for equidistance and affine-hull membership
///   interior_eps lower bound a barycentric coordinate must exceed
struct Tolerance {
    double abs_eps = 1e-12;
    double rel_eps = 1e-9;
    double interior_eps = 1e-10;

    /// Throws InvalidArgument unless all entries are positive and abs_eps <= rel_eps.
    void validate() const;
};

enum class Emptiness {
    Strict,  ///< other points at squared distance >= r^2 + abs_eps
    Relaxed, ///< other points at squared distance >= r^2 - abs_eps
};

double squared_distance(const Vector& a, const Vector& b);

/// Smallest ball containing all points (deterministic move-to-front scheme).
Sphere min_enclosing_ball(std::span<const Vector> points, const Tolerance& tol = {});

/// Smallest sphere through all points; its center lies in their affine hull.
/// Throws AffineDegeneracy if the points are affinely dependent.
Sphere circumsphere(std::span<const Vector> points, const Tolerance& tol = {});

/// Barycentric coordinates of x with respect to affinely independent points.
/// Throws NotInAffineHull if x is farther than rel_eps * diameter from their hull.
Eigen::VectorXd barycentric_coordinates(std::span<const Vector> simplex_points, const Vector& x,
                                        const Tolerance& tol = {});

bool barycentric_interior(std::span<const Vector> simplex_points, const Vector& x,
                          const Tolerance& tol = {});

/// Euclidean distance from x to the affine hull of the points.
double distance_to_affine_hull(std::span<const Vector> points, const Vector& x);

/// First index i (not in `exclude`, which must be sorted) whose point violates emptiness
/// of `s`, or nullopt if the sphere is empty in the requested mode.
std::optional<std::size_t> first_point_inside(const Sphere& s, std::span<const Vector> points,
                                              std::span<const std::size_t> exclude,
                                              Emptiness mode, const Tolerance& tol = {});

bool is_empty_sphere(const Sphere& s, std::span<const Vector> points,
                     std::span<const std::size_t> exclude, Emptiness mode = Emptiness::Strict,
                     const Tolerance& tol = {});

/// Gathers points[ids[i]] into a contiguous vector.
std::vector<Vector> gather(std::span<const Vector> points, std::span<const std::size_t> ids);

} // namespace extremal
