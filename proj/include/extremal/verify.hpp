#pragma once

#include "extremal/complexgen.hpp"
#include "extremal/construct.hpp"
#include "extremal/homology.hpp"
#include "extremal/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string_view to_string(ClaimStatus s);

struct ClaimResult {
    std::string claim_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string expected;
    std::string observed;
    ClaimStatus status = ClaimStatus::Fail;
    std::string detail;

    /// `key=value` pairs joined by ';'.
    std::string params_string() const;
};

/// True when no claim failed (skipped claims do not count as failures).
bool all_passed(std::span<const ClaimResult> claims);
bool any_failed(std::span<const ClaimResult> claims);

/// `claim_id,params,expected,observed,status`, fields quoted when needed.
void write_report_csv(std::ostream& out, std::span<const ClaimResult> claims);
/// One line per claim: `STATUS claim_id [params] expected=... observed=...`.
void write_report_text(std::ostream& out, std::span<const ClaimResult> claims);

/// A validated construction: filtration, thresholds and diagram built from one delta.
struct Pipeline {
    PointSet ps;
    FilteredComplex fc;
    std::vector<Threshold> thresholds;
    PersistenceDiagram pd;
    std::vector<std::string> rejected; ///< deltas discarded by the controller
};

struct PipelineOptions {
    Tolerance tol;
    /// Unset: run the delta controller. Set: use this delta once, no retries.
    std::optional<double> delta;
    bool reduced = true;
};

/// Builds and validates Even, ThreeD or Odd constructions (k is ignored for ThreeD).
/// Validation = strict emptiness of every radius value, class separation and
/// zero criticality failures. Errors propagate as NotCritical, Overlap or
/// ControllerExhausted.
Pipeline run_pipeline(Kind kind, int k, int n, const PipelineOptions& opt = {});

/// A Betti number evaluated at the threshold following class `after`, with the
/// closed-form leading term and the exponent m of its error allowance O(n^m).
struct BettiTarget {
    int p = 0;
    SimplexClass after;
    double leading = 0.0;
    int error_order = 0;
};
std::vector<BettiTarget> betti_targets(Kind kind, int k, int n);

/// Expected number of simplices of class c in the combinatorial mosaic.
std::size_t class_count(Kind kind, int k, int n, SimplexClass c);

// --- claims -----------------------------------------------------------------

/// Exact beta_1 = (n+1)^2 - 1 and beta_2 = n^2 of the three-dimensional set,
/// optionally cross-checked with the Cech oracle.
std::vector<ClaimResult> verify_three_d_betti(int n, const PipelineOptions& opt = {},
                                              bool cech_check = true);
/// Exact edge, triangle and tetrahedron counts of the three-dimensional mosaic.
std::vector<ClaimResult> verify_three_d_census(int n, const PipelineOptions& opt = {});
/// Even k = 2: beta_1 = n^2 + 1 at r = 1/2 and reduced beta_0 = 2n - 1 below the
/// short-edge radius.
std::vector<ClaimResult> verify_even_anchor(int n, const Tolerance& tol = {});

/// Leading-term checks for every beta_p at its class threshold. The allowed
/// deviation is the largest normalized deviation |observed - leading| / n^m seen
/// at the two smallest admissible n.
std::vector<ClaimResult> verify_even_betti(int k, std::span<const int> ns,
                                           const Tolerance& tol = {});
std::vector<ClaimResult> verify_odd_betti(int k, std::span<const int> ns,
                                          const PipelineOptions& opt = {});
/// Odd k = 1 and the three-dimensional pipeline agree at corresponding thresholds.
std::vector<ClaimResult> verify_odd_matches_three_d(int n, const Tolerance& tol = {});

/// Per-class simplex counts against closed forms.
std::vector<ClaimResult> verify_census(const Pipeline& pl);
/// Class value ranges are disjoint and increase with (touch, short).
std::vector<ClaimResult> verify_ordering(const Pipeline& pl);
/// Zero criticality failures.
std::vector<ClaimResult> verify_criticality(const Pipeline& pl);
/// Three-dimensional set with a large delta must produce criticality failures.
std::vector<ClaimResult> verify_criticality_sensitivity(int n, double delta = 0.5);
/// Mosaic equals the LP oracle up to maxdim; Cech and alpha Betti vectors agree
/// at every threshold.
std::vector<ClaimResult> verify_oracle(const Pipeline& pl, int maxdim,
                                       const OracleOptions& opt = {});
/// beta_p(r) <= number of p-simplices with value <= r, for every filtration value.
std::vector<ClaimResult> verify_upper_bound_sanity(const Pipeline& pl);
/// Euler characteristic at every filtration value and diagram invariance under
/// `shuffles` random permutations of equal (value, dim) groups.
std::vector<ClaimResult> verify_homology_self_checks(const Pipeline& pl, int shuffles = 10,
                                                     unsigned long long seed = 1);

/// Closed-form circumradii of the even construction and of the ideal triangle
/// and tetrahedron, plus the square-root-free bounds on them.
std::vector<ClaimResult> verify_radius_formulas(int k, int n, const Tolerance& tol = {});
/// Edge, triangle and tetrahedron radius bounds of the three-dimensional set,
/// with the triangle's fourth-order constant measured over delta halvings.
std::vector<ClaimResult> verify_three_d_radius_bounds(int n, const Tolerance& tol = {});

/// Deltas used by the convergence fits.
inline constexpr double kHypothesisDeltas[] = {1e-2, 5e-3, 2.5e-3, 1.25e-3};

/// Convergence-order fits for the circumradius, in-ball, pyramid and bi-pyramid
/// expansions of the odd construction, and the bisector distance bound.
std::vector<ClaimResult> verify_hypotheses(int k, int n, const Tolerance& tol = {});

struct SuspensionOptions {
    Tolerance tol;
    OracleOptions oracle;
    /// Unset: search the apex height. Set: use it directly.
    std::optional<double> h;
};

struct SuspensionResult {
    PointSet ps;
    double radius = 0.0;   ///< verifying radius
    int target = 0;        ///< Betti number of the base set being suspended
    int betti = 0;         ///< beta_{2k-1} of the suspended Cech complex
    int betti_without_apexes = 0;
    bool found = false;
    std::string detail;
};

/// Builds the suspended set, picks the apex height and measures beta_{2k-1}.
SuspensionResult run_suspension(int k, int n, const SuspensionOptions& opt = {});
/// beta_{2k-1} against (n+1)^k with the O(n^{k-1}) baseline allowance, and
/// beta_{2k-1} = 0 without apexes.
std::vector<ClaimResult> verify_suspension(int k, std::span<const int> ns,
                                           const SuspensionOptions& opt = {});

} // namespace extremal
