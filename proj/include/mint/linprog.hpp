//
// Project     : mint
// Module      : linprog
// Description : dense two-phase simplex for the tiny LPs behind the convex
//               hull queries (at most a few dozen variables)
//
#pragma once

#include <Eigen/Core>

namespace mint::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status;
  Eigen::VectorXd x;  // primal point, empty unless Optimal
  double objective;   // c . x at the optimum
};

// Solves min c.x subject to A x = b, x >= 0 with Bland's pivoting rule.
Solution solve(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd c, double eps = 1e-9);

// Phase-one only: is {x >= 0 : A x = b} non-empty?
bool feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double eps = 1e-9);

}  // namespace mint::lp
