#pragma once

#include "extremal/complexgen.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace extremal {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

struct PersistencePair {
    int dim = 0;
    double birth = 0.0;
    double death = kInfinity;
    std::size_t birth_index = 0;       ///< filtration position of the creating simplex
    std::size_t death_index = kNoIndex; ///< kNoIndex for essential classes

    bool essential() const { return death_index == kNoIndex; }
};

/// All pairs, zero-persistence ones included, sorted by (dim, birth, death).
struct PersistenceDiagram {
    std::vector<PersistencePair> pairs;
    bool reduced = true;

    std::size_t finite_count() const;
    std::size_t essential_count() const;
};

/// Standard Z/2 column reduction in filtration order.
/// Throws OrderingViolation if the filtration is not face-closed and sorted.
PersistenceDiagram reduce(const FilteredComplex& fc, bool reduced = true);

/// #{pairs of dim p with birth <= r + abs_eps < death}, minus one for reduced p = 0.
int betti_at(const PersistenceDiagram& pd, int p, double r, const Tolerance& tol = {});

/// beta_0..beta_{max_dim} of the sublevel complex at r.
std::vector<int> betti_numbers(const PersistenceDiagram& pd, int max_dim, double r,
                               const Tolerance& tol = {});

/// Betti numbers of the sublevel complex by direct Z/2 rank computation.
std::vector<int> betti_by_rank(const FilteredComplex& fc, double r, bool reduced = true,
                               const Tolerance& tol = {});

/// Betti numbers of the sublevel complex at r from the persistence diagram,
/// cross-checked against betti_by_rank. Throws Error on disagreement.
std::vector<int> betti_of_subcomplex(const FilteredComplex& fc, double r, bool reduced = true,
                                     const Tolerance& tol = {});
/// Same, reusing a diagram already computed from fc.
std::vector<int> betti_of_subcomplex(const FilteredComplex& fc, const PersistenceDiagram& pd,
                                     double r, const Tolerance& tol = {});

/// First filtration value where the Euler characteristic of the sublevel
/// complex differs from the alternating sum of unreduced Betti numbers.
std::optional<double> euler_mismatch(const FilteredComplex& fc, const PersistenceDiagram& pd);

/// Copy of fc with each run of equal (value, dim) entries randomly permuted.
FilteredComplex shuffle_within_groups(const FilteredComplex& fc, std::mt19937_64& rng);

/// Compares (dim, birth, death) multisets; simplex indices are ignored.
bool same_diagram(const PersistenceDiagram& a, const PersistenceDiagram& b);

} // namespace extremal
