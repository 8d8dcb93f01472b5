#include "extremal/oracle.hpp"

#include "extremal/errors.hpp"
#include "extremal/lp.hpp"
#include "extremal/parallel.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace extremal {

namespace {

constexpr double kBox = 10.0;

void check_budget(std::size_t candidates, const OracleOptions& opt, const char* who) {
    if (candidates > opt.budget)
        throw BudgetExceeded(std::string(who) + ": " + std::to_string(candidates) +
                             " subsets exceed the budget of " + std::to_string(opt.budget));
}

// All subsets of {0..count-1} with 1..max_size elements, in (size, lex) order.
std::vector<Simplex> all_subsets(std::size_t count, int max_size) {
    std::vector<Simplex> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto& self, std::size_t start) -> void {
        if (!cur.empty()) out.push_back({cur});
        if (static_cast<int>(cur.size()) == max_size) return;
        for (std::size_t v = start; v < count; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(),
                     [](const Simplex& a, const Simplex& b) { return a.dim() < b.dim(); });
    return out;
}

} // namespace

std::size_t subset_count(std::size_t count, int max_size) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t binom = 1;
    for (int i = 1; i <= max_size && static_cast<std::size_t>(i) <= count; ++i) {
        const auto num = count - static_cast<std::size_t>(i) + 1;
        if (binom > kMax / num) return kMax;
        binom = binom * num / static_cast<std::size_t>(i);
        if (total > kMax - binom) return kMax;
        total += binom;
    }
    return total;
}

FilteredComplex CechComplex::filtration() const {
    auto entries = simplices;
    repair_monotonicity(entries);
    return make_filtration(std::move(entries));
}

CechComplex cech(const PointSet& ps, double r, int maxdim, const OracleOptions& opt) {
    if (maxdim < 0 || maxdim > ps.dim)
        throw InvalidArgument("cech: maxdim must lie in [0, d]");
    check_budget(subset_count(ps.size(), maxdim + 1), opt, "cech");
    const double level = r + opt.tol.abs_eps;
    const std::size_t count = ps.size();
    // One branch per lowest vertex; miniball radius is monotone, so a failing
    // subset prunes all its extensions.
    std::vector<std::vector<FilteredEntry>> branch(count);
    parallel_for(count, [&](std::size_t first) {
        std::vector<std::size_t> cur{first};
        auto rec = [&](auto& self) -> void {
            const auto pts = gather(ps.points, cur);
            const double radius = min_enclosing_ball(pts, opt.tol).radius;
            if (radius > level) return;
            branch[first].push_back({{Simplex{cur}, std::nullopt}, radius});
            if (static_cast<int>(cur.size()) == maxdim + 1) return;
            for (std::size_t v = cur.back() + 1; v < count; ++v) {
                cur.push_back(v);
                self(self);
                cur.pop_back();
            }
        };
        if (r >= 0.0) rec(rec);
    });
    CechComplex cx;
    cx.maxdim = maxdim;
    for (auto& b : branch)
        for (auto& e : b) cx.simplices.push_back(std::move(e));
    std::sort(cx.simplices.begin(), cx.simplices.end(), [](const auto& a, const auto& b) {
        if (a.cell.dim() != b.cell.dim()) return a.cell.dim() < b.cell.dim();
        return a.cell.simplex < b.cell.simplex;
    });
    return cx;
}

std::vector<int> cech_betti(const PointSet& ps, double r, int maxdim, bool reduced,
                            const OracleOptions& opt) {
    const auto fc = cech(ps, r, maxdim, opt).filtration();
    auto betti = betti_of_subcomplex(fc, r, reduced, opt.tol);
    betti.resize(static_cast<std::size_t>(maxdim), 0);
    return betti;
}

BettiComparison cech_equals_alpha_betti(const PointSet& ps, const FilteredComplex& alpha, double r,
                                        int pmax, bool reduced, const OracleOptions& opt) {
    BettiComparison cmp;
    cmp.radius = r;
    cmp.cech = cech_betti(ps, r, pmax + 1, reduced, opt);
    cmp.alpha = betti_of_subcomplex(alpha, r, reduced, opt.tol);
    cmp.alpha.resize(static_cast<std::size_t>(pmax + 1), 0);
    return cmp;
}

double delaunay_margin(const PointSet& ps, const Simplex& s) {
    if (s.vertices.empty()) throw InvalidSimplex("delaunay_margin: empty simplex");
    if (static_cast<int>(s.vertices.size()) > ps.dim + 1)
        throw InvalidSimplex("delaunay_margin: more than d + 1 vertices");
    const auto d = static_cast<Eigen::Index>(ps.dim);
    const auto& a0 = ps.points[s.vertices[0]];
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!std::binary_search(s.vertices.begin(), s.vertices.end(), i)) others.push_back(i);
    if (others.empty()) return std::numeric_limits<double>::infinity();

    // Power of z with respect to point a (up to the common |z|^2): |a|^2 - 2<z, a>.
    // Substituting z = y - kBox with 0 <= y <= 2 kBox keeps all variables nonnegative.
    // Variables: y (d), m+ , m-.
    LinearProgram lp;
    const Eigen::Index nv = d + 2;
    lp.c = Eigen::VectorXd::Zero(nv);
    lp.c(d) = 1.0;
    lp.c(d + 1) = -1.0;
    const auto neq = static_cast<Eigen::Index>(s.vertices.size() - 1);
    lp.a_eq = Eigen::MatrixXd::Zero(neq, nv);
    lp.b_eq = Eigen::VectorXd::Zero(neq);
    for (Eigen::Index i = 0; i < neq; ++i) {
        const Vector diff = ps.points[s.vertices[i + 1]] - a0;
        lp.a_eq.row(i).head(d) = 2.0 * diff.transpose();
        lp.b_eq(i) = ps.points[s.vertices[i + 1]].squaredNorm() - a0.squaredNorm() +
                     2.0 * kBox * diff.sum();
    }
    const auto nle = static_cast<Eigen::Index>(others.size()) + d;
    lp.a_le = Eigen::MatrixXd::Zero(nle, nv);
    lp.b_le = Eigen::VectorXd::Zero(nle);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(others.size()); ++i) {
        // power_b - power_0 >= m
        const Vector diff = ps.points[others[i]] - a0;
        lp.a_le.row(i).head(d) = 2.0 * diff.transpose();
        lp.a_le(i, d) = 1.0;
        lp.a_le(i, d + 1) = -1.0;
        lp.b_le(i) = ps.points[others[i]].squaredNorm() - a0.squaredNorm() +
                     2.0 * kBox * diff.sum();
    }
    for (Eigen::Index c = 0; c < d; ++c) {
        lp.a_le(static_cast<Eigen::Index>(others.size()) + c, c) = 1.0;
        lp.b_le(static_cast<Eigen::Index>(others.size()) + c) = 2.0 * kBox;
    }
    const auto res = solve_lp(lp);
    if (res.status == LpStatus::Infeasible) return -std::numeric_limits<double>::infinity();
    if (res.status == LpStatus::Unbounded) return std::numeric_limits<double>::infinity();
    return res.objective;
}

bool delaunay_face_test(const PointSet& ps, const Simplex& s, const Tolerance& tol) {
    return delaunay_margin(ps, s) > tol.abs_eps;
}

EnumerationComparison enumeration_matches_oracle(const PointSet& ps, int maxdim,
                                                 const OracleOptions& opt) {
    if (maxdim < 0 || maxdim > ps.dim)
        throw InvalidArgument("enumeration_matches_oracle: maxdim must lie in [0, d]");
    check_budget(subset_count(ps.size(), maxdim + 1), opt, "enumeration_matches_oracle");
    const auto subsets = all_subsets(ps.size(), maxdim + 1);
    std::vector<char> accepted(subsets.size(), 0);
    parallel_for(subsets.size(), [&](std::size_t i) {
        accepted[i] = delaunay_face_test(ps, subsets[i], opt.tol) ? 1 : 0;
    });
    std::set<Simplex> oracle;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (accepted[i]) oracle.insert(subsets[i]);
    std::set<Simplex> enumerated;
    for (const auto& c : enumerate(ps))
        if (c.dim() <= maxdim) enumerated.insert(c.simplex);

    EnumerationComparison cmp;
    cmp.checked = subsets.size();
    std::set_difference(enumerated.begin(), enumerated.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(cmp.missing_from_oracle));
    std::set_difference(oracle.begin(), oracle.end(), enumerated.begin(), enumerated.end(),
                        std::back_inserter(cmp.missing_from_enumeration));
    return cmp;
}

} // namespace extremal
