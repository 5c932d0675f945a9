#include "mint/linprog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mint::lp {

namespace {

struct Tableau {
  Eigen::MatrixXd body;       // rows x (vars + 1), last column is the rhs
  std::vector<int> basis;     // basic variable per row
  Eigen::VectorXd reduced;    // reduced cost per variable
  double eps;

  int rows() const { return int(body.rows()); }
  int vars() const { return int(body.cols()) - 1; }

  void pivot(int row, int col) {
    body.row(row) /= body(row, col);
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const double factor = body(i, col);
      if (factor != 0.0) body.row(i) -= factor * body.row(row);
    }
    const double rfactor = reduced[col];
    if (rfactor != 0.0)
      reduced -= rfactor * body.row(row).head(vars()).transpose();
    basis[std::size_t(row)] = col;
  }

  enum class Step { Pivoted, Optimal, Unbounded };

  // Bland: entering = lowest-index improving variable, leaving = lowest-index
  // basic variable among the minimum ratios.
  Step step(const std::vector<bool>& allowed) {
    int entering = -1;
    for (int j = 0; j < vars(); ++j) {
      if (!allowed[std::size_t(j)]) continue;
      if (reduced[j] < -eps) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return Step::Optimal;

    int leaving = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows(); ++i) {
      const double a = body(i, entering);
      if (a > eps) {
        const double ratio = body(i, vars()) / a;
        if (ratio < best_ratio - eps ||
            (ratio < best_ratio + eps &&
             (leaving < 0 || basis[std::size_t(i)] < basis[std::size_t(leaving)]))) {
          best_ratio = ratio;
          leaving = i;
        }
      }
    }
    if (leaving < 0) return Step::Unbounded;
    pivot(leaving, entering);
    return Step::Pivoted;
  }
};

// True at optimality, false on an unbounded ray. Bland's rule terminates;
// the iteration cap is a safety net only.
bool run_simplex(Tableau& t, const std::vector<bool>& allowed) {
  for (long iter = 0; iter < 100000; ++iter) {
    const Tableau::Step result = t.step(allowed);
    if (result == Tableau::Step::Optimal) return true;
    if (result == Tableau::Step::Unbounded) return false;
  }
  throw std::runtime_error("simplex iteration cap exceeded");
}

}  // namespace

Solution solve(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd c, double eps) {
  const int m = int(A.rows());
  const int n = int(A.cols());
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      A.row(i) = -A.row(i);
      b[i] = -b[i];
    }
  }

  Tableau t;
  t.eps = eps;
  t.body.setZero(m, n + m + 1);
  t.body.block(0, 0, m, n) = A;
  t.body.block(0, n, m, m).setIdentity();
  t.body.col(n + m) = b;
  t.basis.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) t.basis[std::size_t(i)] = n + i;

  // Phase one: minimise the sum of the artificial variables.
  t.reduced.setZero(n + m);
  for (int j = 0; j < n; ++j) t.reduced[j] = -t.body.col(j).sum();

  std::vector<bool> allowed(std::size_t(n + m), true);
  if (!run_simplex(t, allowed))
    throw std::runtime_error("phase one cannot be unbounded");  // objective >= 0 always

  double infeasibility = 0.0;
  for (int i = 0; i < m; ++i)
    if (t.basis[std::size_t(i)] >= n) infeasibility += t.body(i, n + m);
  if (infeasibility > eps * double(std::max(1, m)))
    return Solution{Status::Infeasible, Eigen::VectorXd(), 0.0};

  // Drive surviving artificials out of the basis; rows that cannot pivot are
  // redundant and stay parked at value zero with the artificial frozen.
  for (int i = 0; i < m; ++i) {
    if (t.basis[std::size_t(i)] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::abs(t.body(i, j)) > eps) {
        t.pivot(i, j);
        break;
      }
    }
  }
  for (int j = n; j < n + m; ++j) allowed[std::size_t(j)] = false;

  // Phase two with the real objective.
  t.reduced.setZero(n + m);
  for (int j = 0; j < n; ++j) t.reduced[j] = c[j];
  for (int i = 0; i < m; ++i) {
    const int bj = t.basis[std::size_t(i)];
    if (bj < n && c[bj] != 0.0)
      t.reduced -= c[bj] * t.body.row(i).head(n + m).transpose();
  }
  for (int j = n; j < n + m; ++j) t.reduced[j] = 0.0;
  if (!run_simplex(t, allowed)) return Solution{Status::Unbounded, Eigen::VectorXd(), 0.0};

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    const int bj = t.basis[std::size_t(i)];
    if (bj < n) x[bj] = t.body(i, n + m);
  }
  return Solution{Status::Optimal, x, c.dot(x)};
}

bool feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double eps) {
  return solve(A, b, Eigen::VectorXd::Zero(A.cols()), eps).status == Status::Optimal;
}

}  // namespace mint::lp
