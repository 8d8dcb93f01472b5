#pragma once

#include "extremal/complexgen.hpp"
#include "extremal/construct.hpp"
#include "extremal/homology.hpp"

#include <cstddef>
#include <vector>

namespace extremal {

inline constexpr std::size_t kDefaultSubsetBudget = 10'000'000;

struct OracleOptions {
    Tolerance tol;
    std::size_t budget = kDefaultSubsetBudget;
};

/// Subsets of at most maxdim + 1 points with miniball radius <= r + abs_eps,
/// sorted by (dim, vertices).
struct CechComplex {
    int maxdim = 0;
    std::vector<FilteredEntry> simplices;

    /// The same simplices as a filtration ordered by miniball radius.
    FilteredComplex filtration() const;
};

/// Sum of C(count, i) for i = 1..max_size, saturating at SIZE_MAX.
std::size_t subset_count(std::size_t count, int max_size);

/// Throws BudgetExceeded if the number of candidate subsets exceeds the budget.
CechComplex cech(const PointSet& ps, double r, int maxdim, const OracleOptions& opt = {});

/// Betti numbers beta_0..beta_{maxdim-1} of the Cech complex at r.
std::vector<int> cech_betti(const PointSet& ps, double r, int maxdim, bool reduced = true,
                            const OracleOptions& opt = {});

struct BettiComparison {
    double radius = 0.0;
    std::vector<int> cech;
    std::vector<int> alpha;
    bool equal() const { return cech == alpha; }
};

/// Compares beta_0..beta_pmax of the Cech complex (maxdim pmax + 1) and of the
/// alpha sublevel complex of `alpha` at r.
BettiComparison cech_equals_alpha_betti(const PointSet& ps, const FilteredComplex& alpha, double r,
                                        int pmax, bool reduced = true,
                                        const OracleOptions& opt = {});

/// Optimal margin of the empty-sphere LP for s: positive iff some sphere passes
/// through the vertices of s with every other point strictly outside.
double delaunay_margin(const PointSet& ps, const Simplex& s);

/// True iff delaunay_margin > abs_eps.
bool delaunay_face_test(const PointSet& ps, const Simplex& s, const Tolerance& tol = {});

struct EnumerationComparison {
    std::size_t checked = 0;
    std::vector<Simplex> missing_from_oracle;      ///< enumerated but rejected by the LP
    std::vector<Simplex> missing_from_enumeration; ///< accepted by the LP but not enumerated
    bool ok() const { return missing_from_oracle.empty() && missing_from_enumeration.empty(); }
};

/// Compares the combinatorial mosaic (dimensions <= maxdim) with every subset of
/// at most maxdim + 1 points passing delaunay_face_test.
EnumerationComparison enumeration_matches_oracle(const PointSet& ps, int maxdim,
                                                 const OracleOptions& opt = {});

} // namespace extremal
