#include "extremal/lp.hpp"

#include "extremal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace extremal {

namespace {

// Tableau rows 0..m-1 are constraints, row m is the objective row holding
// reduced costs (maximization: a positive entry may enter). Column `cols` is the rhs.
class Tableau {
public:
    Tableau(Eigen::Index rows, Eigen::Index cols) : t_(Eigen::MatrixXd::Zero(rows + 1, cols + 1)),
                                                    basis_(rows, -1), m_(rows), n_(cols) {}

    double& at(Eigen::Index r, Eigen::Index c) { return t_(r, c); }
    double& rhs(Eigen::Index r) { return t_(r, n_); }
    double& cost(Eigen::Index c) { return t_(m_, c); }
    double objective() const { return -t_(m_, n_); }
    std::vector<Eigen::Index>& basis() { return basis_; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index r = 0; r <= m_; ++r) {
            if (r == row) continue;
            const double f = t_(r, col);
            if (f != 0.0) t_.row(r) -= f * t_.row(row);
        }
        basis_[row] = col;
    }

    // Makes the objective row consistent with the current basis.
    void price_out() {
        for (Eigen::Index r = 0; r < m_; ++r) {
            const double f = t_(m_, basis_[r]);
            if (f != 0.0) t_.row(m_) -= f * t_.row(r);
        }
    }

    // Returns false when unbounded. Only columns < active take part.
    bool optimize(Eigen::Index active, double eps) {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index c = 0; c < active; ++c) {
                if (t_(m_, c) > eps) {
                    enter = c;
                    break;
                }
            }
            if (enter < 0) return true;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index r = 0; r < m_; ++r)
                if (t_(r, enter) > eps) best = std::min(best, t_(r, n_) / t_(r, enter));
            Eigen::Index leave = -1;
            const double slack = eps * std::max(1.0, std::abs(best));
            for (Eigen::Index r = 0; r < m_; ++r) {
                if (t_(r, enter) <= eps || t_(r, n_) / t_(r, enter) > best + slack) continue;
                if (leave < 0 || basis_[r] < basis_[leave]) leave = r;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Eigen::Index rows() const { return m_; }
    Eigen::Index cols() const { return n_; }

private:
    Eigen::MatrixXd t_;
    std::vector<Eigen::Index> basis_;
    Eigen::Index m_;
    Eigen::Index n_;
};

} // namespace

LpResult solve_lp(const LinearProgram& lp, double pivot_eps) {
    const Eigen::Index nx = lp.c.size();
    const Eigen::Index meq = lp.a_eq.rows();
    const Eigen::Index mle = lp.a_le.rows();
    if ((meq > 0 && (lp.a_eq.cols() != nx || lp.b_eq.size() != meq)) ||
        (mle > 0 && (lp.a_le.cols() != nx || lp.b_le.size() != mle)))
        throw DimensionMismatch("solve_lp: inconsistent constraint shapes");

    const Eigen::Index m = meq + mle;
    // Columns: x (nx), slacks (mle), artificials (m).
    const Eigen::Index slack0 = nx;
    const Eigen::Index art0 = nx + mle;
    Tableau tab(m, art0 + m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const bool eq = r < meq;
        double b = eq ? lp.b_eq(r) : lp.b_le(r - meq);
        const double sign = b < 0.0 ? -1.0 : 1.0;
        for (Eigen::Index c = 0; c < nx; ++c)
            tab.at(r, c) = sign * (eq ? lp.a_eq(r, c) : lp.a_le(r - meq, c));
        if (!eq) tab.at(r, slack0 + (r - meq)) = sign;
        tab.at(r, art0 + r) = 1.0;
        tab.rhs(r) = sign * b;
        tab.basis()[r] = art0 + r;
    }

    // Phase 1: maximize -sum(artificials).
    for (Eigen::Index r = 0; r < m; ++r) tab.cost(art0 + r) = -1.0;
    tab.price_out();
    tab.optimize(art0 + m, pivot_eps);
    double infeasibility = -tab.objective();
    double scale = 1.0;
    for (Eigen::Index r = 0; r < m; ++r) scale = std::max(scale, std::abs(tab.rhs(r)));
    LpResult res;
    if (infeasibility > 1e3 * pivot_eps * scale) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    // Drive remaining artificials out of the basis.
    for (Eigen::Index r = 0; r < m; ++r) {
        if (tab.basis()[r] < art0) continue;
        Eigen::Index best = -1;
        double mag = pivot_eps;
        for (Eigen::Index c = 0; c < art0; ++c) {
            if (std::abs(tab.at(r, c)) > mag) {
                mag = std::abs(tab.at(r, c));
                best = c;
            }
        }
        if (best >= 0) tab.pivot(r, best);
    }

    // Phase 2 on the original objective; artificial columns are frozen out.
    for (Eigen::Index c = 0; c <= tab.cols(); ++c) tab.cost(c) = 0.0;
    for (Eigen::Index c = 0; c < nx; ++c) tab.cost(c) = lp.c(c);
    tab.price_out();
    if (!tab.optimize(art0, pivot_eps)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x = Eigen::VectorXd::Zero(nx);
    for (Eigen::Index r = 0; r < m; ++r)
        if (tab.basis()[r] < nx) res.x(tab.basis()[r]) = tab.rhs(r);
    res.objective = lp.c.dot(res.x);
    return res;
}

} // namespace extremal
