//
// Project     : mint
// Module      : apps
// Description : desk-scale application kernels: a truncated Hilbert-type
//               pair, Calderon-Zygmund style kernels on periodic grids, and
//               the bilinear Hilbert transform on a cyclic group
//
#pragma once

#include <cstdint>
#include <string>

#include "mint/forms.hpp"

namespace mint {

// K(x, y) = 1/(y - x) for 0 < |x - y| <= n/2 on an n-point unit-weight grid.
Kernel make_wolff_pair(Eigen::Index n);

// An (m+1)-linear kernel on 1-d periodic grids of side `grid`, bounded by
// c_size * D^{-m} in size and c_grad * D^{-m-1} in one-step increments,
// where D is the sum of pairwise periodic distances; zero inside the
// truncation radius.
struct CZConfig {
  int m = 2;
  Eigen::Index grid = 4;
  double c_size = 1.0;
  double c_grad = 1.0;
  double eps_trunc = 1.0;
};

// Random kernel satisfying the config's bounds by construction.
Kernel make_cz_kernel(const CZConfig& config, std::uint64_t seed);

struct CzCheckResult {
  bool ok = true;
  Eigen::Index violation = -1;  // flat index of the first violation
  std::string kind;             // "size" or "gradient"
  double measured = 0.0;
  double allowed = 0.0;
};

// Verifies the size bound outside the truncation radius and the one-step
// difference bound between points both outside it.
CzCheckResult check_cz_bounds(const Kernel& kernel, const CZConfig& config);

// Lambda(f0, f1, f2) = sum_x sum_{eps <= |t| <= tmax} f0(x) f1(x - alpha t)
// f2(x - beta t) / t on the cyclic group Z_n, t a signed representative.
struct BHTConfig {
  Eigen::Index n = 5;
  std::int64_t alpha = 1;
  std::int64_t beta = 2;
  std::int64_t eps = 1;
  std::int64_t tmax = 2;
};

Kernel make_bht_form(const BHTConfig& config);

// Max entrywise deviation between T^{*1}, T^{*2} of the form (applied to a
// point-mass basis) and the directly built transforms with parameters
// (-alpha, beta-alpha) and (alpha-beta, -beta). Exact change of variables on
// the group, so the result is roundoff-sized.
double bht_adjoint_identity_residual(const BHTConfig& config);

}  // namespace mint
