//
// Project     : mint
// Module      : interp
// Description : interpolation of restricted weak-type bounds with an
//               explicit constant, plus a step-by-step proof trace
//
#pragma once

#include <string>
#include <vector>

#include "mint/constants.hpp"

namespace mint {

// The constant C = max_s 2^{1 - alpha^{(s)}_{j_s}} / (1 - 2^{-alpha_{j_s}}),
// j_s the bad index of claim s: the fixed point of the two-piece splitting
// estimate as epsilon -> 0, maximised over the claim the split lands on.
// Requires alpha good and equal to the convex combination to 1e-9.
double explicit_constant(const ExponentTuple& alpha, const std::vector<ExponentTuple>& claims,
                         const CombinationWeights& weights);

struct TheoremReport {
  ExponentTuple alpha;
  std::vector<EstimateClaim> claims;
  CombinationWeights thetas;
  double A = 0.0;                  // exhaustive char constant at alpha
  double C = 0.0;                  // explicit interpolation constant
  double product_of_bounds = 0.0;  // prod B_s^{theta_s}
  bool pass = false;               // A <= C * product + 1e-9
  double margin = 0.0;             // C * product - A
};

// Computes A exhaustively and checks it against C * prod B_s^{theta_s}.
TheoremReport verify_theorem(const Kernel& kernel, const std::vector<EstimateClaim>& claims,
                             const CombinationWeights& weights, const ExponentTuple& alpha,
                             int threads = 1);

// One checked inequality lhs <= rhs (up to stated slack) inside a trace.
struct ProofCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

// The objects the splitting argument builds on a near-extremal witness. All
// quantities live on the scale where the claim-bound product is one:
// a_normalized = A / prod B_s^{theta_s}.
struct ProofTrace {
  double epsilon = 0.0;
  double a_normalized = 0.0;
  double q = 0.0;  // prod B_s^{theta_s} * prod mu_i(E_i)^{alpha_i}
  int s0_index = -1;
  int bad_index = -1;
  SimpleFunction f;  // T^{*j} of the other indicators
  double lambda_threshold = 0.0;
  SubsetWitness eprime;  // the points of E_j where |f| >= lambda
  bool halves_ok = false;
  double split_low = 0.0;   // |Lambda| with E_j \ E'_j in slot j
  double split_high = 0.0;  // |Lambda| with E'_j in slot j
  std::vector<SubsetWitness> witnesses;
  std::vector<ProofCheck> checks;

  bool all_ok() const;
};

// Replays the splitting argument: picks the lexicographically smallest
// witness tuple with normalized quotient >= a_normalized - epsilon, selects
// the pivot claim s0, halves E_j against the threshold, and records every
// inequality along the way. Requires 0 < epsilon < a_normalized.
ProofTrace trace_proof(const Kernel& kernel, const std::vector<EstimateClaim>& claims,
                       const CombinationWeights& weights, const ExponentTuple& alpha,
                       double epsilon, int threads = 1);

}  // namespace mint
