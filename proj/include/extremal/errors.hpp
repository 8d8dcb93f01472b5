#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: parameter ranges, malformed files, unknown options.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Points passed to a circumsphere/barycentric query are affinely dependent.
class AffineDegeneracy : public Error {
public:
    using Error::Error;
};

class NotInAffineHull : public Error {
public:
    using Error::Error;
};

/// Two same-circle vertices that are not neighbours, or three on one circle.
class InvalidSimplex : public Error {
public:
    using Error::Error;
};

/// A data point lies inside the smallest sphere of an enumerated simplex.
/// Signals that the construction parameter delta is too large.
class NotCritical : public Error {
public:
    NotCritical(const std::string& what, std::size_t point_id)
        : Error(what), point_id_(point_id) {}
    std::size_t point_id() const noexcept { return point_id_; }

private:
    std::size_t point_id_;
};

/// Radius ranges of two simplex classes intersect.
class Overlap : public Error {
public:
    using Error::Error;
};

/// Filtration is not face-closed or a face follows one of its cofaces.
class OrderingViolation : public Error {
public:
    using Error::Error;
};

/// Subset enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The delta-halving controller ran out of attempts.
class ControllerExhausted : public Error {
public:
    using Error::Error;
};

} // namespace extremal
