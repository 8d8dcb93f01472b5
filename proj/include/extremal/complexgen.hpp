#pragma once

#include "extremal/construct.hpp"
#include "extremal/geometry.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace extremal {

/// Strictly increasing list of point ids.
struct Simplex {
    std::vector<std::size_t> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    /// Facets in the order obtained by dropping vertex 0, 1, ...
    std::vector<Simplex> facets() const;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// (touch, short) pair. touch + 1 circles are touched and short + 1 of them
/// contribute two consecutive vertices.
struct SimplexClass {
    int touch = 0;
    int short_edges = -1;
    friend auto operator<=>(const SimplexClass&, const SimplexClass&) = default;
};
std::string to_string(const SimplexClass& c);

/// A simplex together with its class. Complexes that do not come from a
/// construction (the Cech oracle) leave `cls` empty.
struct ClassifiedSimplex {
    Simplex simplex;
    std::optional<SimplexClass> cls;

    int dim() const { return simplex.dim(); }
};

struct FilteredEntry {
    ClassifiedSimplex cell;
    double value = 0.0;
};

/// Simplices with radius values, sorted by (value, dim, lexicographic vertices).
struct FilteredComplex {
    std::vector<FilteredEntry> entries;

    std::size_t size() const { return entries.size(); }
    int max_dim() const;
    /// Number of p-simplices, indexed by p.
    std::vector<std::size_t> census() const;
};

ClassifiedSimplex classify(const PointSet& ps, const Simplex& s);

std::vector<ClassifiedSimplex> enumerate_even(const PointSet& ps);
std::vector<ClassifiedSimplex> enumerate_odd(const PointSet& ps);
/// Dispatches on ps.kind. Suspended sets have no combinatorial mosaic here.
std::vector<ClassifiedSimplex> enumerate(const PointSet& ps);

/// Radius of the vertex miniball after checking that its sphere is strictly
/// empty. Throws NotCritical naming the first offending point.
double radius_value(const PointSet& ps, const Simplex& s, const Tolerance& tol = {});

struct FiltrationOptions {
    Tolerance tol;
    /// Use the miniball radius without the emptiness assertion.
    bool assert_empty = true;
};

FilteredComplex build_filtration(const PointSet& ps, const FiltrationOptions& opt = {});
/// Builds a filtration from explicit (simplex, value) pairs: sorts and checks closure.
FilteredComplex make_filtration(std::vector<FilteredEntry> entries);

/// Sorts by (value, dim, lex).
void sort_filtration(std::vector<FilteredEntry>& entries);
/// Raises a value to the largest value among its facets when it falls short by
/// at most abs_eps (rounding between miniball code paths). Larger gaps are kept.
void repair_monotonicity(std::vector<FilteredEntry>& entries, const Tolerance& tol = {});
/// Throws OrderingViolation if a facet is missing or appears after its coface.
void check_face_order(const FilteredComplex& fc);

struct ClassRange {
    SimplexClass cls;
    double min_value = 0.0;
    double max_value = 0.0;
    std::size_t count = 0;
};
/// Value range per class, ordered lexicographically by (touch, short).
std::vector<ClassRange> class_ranges(const FilteredComplex& fc);

struct Threshold {
    SimplexClass below; ///< last class included in R^{-1}[0, rho]
    SimplexClass above; ///< first class excluded
    double rho = 0.0;
    double gap = 0.0;
};
/// Midpoints of the gaps between consecutive class ranges. Throws Overlap.
std::vector<Threshold> pick_thresholds(const FilteredComplex& fc);
/// Threshold whose `below` class is `c`, if present.
std::optional<Threshold> threshold_after(std::span<const Threshold> ts, SimplexClass c);

struct CriticalityFailure {
    Simplex simplex;
    std::string reason;
};

struct CriticalityReport {
    std::size_t checked = 0;
    std::vector<CriticalityFailure> failures;
    bool ok() const { return failures.empty(); }
};

CriticalityReport criticality_check(const PointSet& ps, std::span<const ClassifiedSimplex> cells,
                                    const Tolerance& tol = {});
CriticalityReport criticality_check(const PointSet& ps, const FilteredComplex& fc,
                                    const Tolerance& tol = {});

/// Position of each simplex in a filtration.
using SimplexIndex = std::unordered_map<Simplex, std::size_t, SimplexHash>;
SimplexIndex index_of(const FilteredComplex& fc);

} // namespace extremal
