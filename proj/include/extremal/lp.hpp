#pragma once

#include <Eigen/Dense>

namespace extremal {

/// maximize c'x  subject to  a_eq x = b_eq,  a_le x <= b_le,  x >= 0.
/// Either constraint block may have zero rows.
struct LinearProgram {
    Eigen::MatrixXd a_eq;
    Eigen::VectorXd b_eq;
    Eigen::MatrixXd a_le;
    Eigen::VectorXd b_le;
    Eigen::VectorXd c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    Eigen::VectorXd x;
};

/// Dense two-phase tableau simplex with Bland's rule. `pivot_eps` is the
/// magnitude below which tableau entries count as zero.
LpResult solve_lp(const LinearProgram& lp, double pivot_eps = 1e-11);

} // namespace extremal
