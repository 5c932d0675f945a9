#include "mint/interp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mint/lorentz.hpp"

namespace mint {

namespace {

constexpr double kPassSlack = 1e-9;
constexpr double kRelSlack = 1e-9;
constexpr double kHalfSlack = 1e-12;

void check_combination(const ExponentTuple& alpha, const std::vector<ExponentTuple>& claims,
                       const CombinationWeights& weights) {
  if (!classify(alpha).good) raise(ErrorCode::NotGoodTuple, "the target tuple must be good");
  const ExponentTuple mixed = convex_combination(claims, weights);
  if ((mixed.entries() - alpha.entries()).cwiseAbs().maxCoeff() > 1e-9)
    raise(ErrorCode::CombinationMismatch,
          "the weighted claims do not recombine to the target tuple");
}

std::vector<ExponentTuple> claim_tuples(const std::vector<EstimateClaim>& claims) {
  std::vector<ExponentTuple> tuples;
  tuples.reserve(claims.size());
  for (const auto& c : claims) tuples.push_back(c.tuple);
  return tuples;
}

double bound_product(const std::vector<EstimateClaim>& claims, const CombinationWeights& weights) {
  double prod = 1.0;
  for (std::size_t s = 0; s < claims.size(); ++s) {
    if (claims[s].bound < 0.0) raise(ErrorCode::InvalidInput, "claim bounds must be nonnegative");
    prod *= std::pow(claims[s].bound, weights[Eigen::Index(s)]);
  }
  return prod;
}

double measure_power_product(const std::vector<SubsetWitness>& sets, const Eigen::VectorXd& alpha) {
  double prod = 1.0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    prod *= std::pow(measure_of(sets[i].space, sets[i]), alpha[Eigen::Index(i)]);
  return prod;
}

ProofCheck make_check(std::string name, double lhs, double rhs, double slack) {
  return ProofCheck{std::move(name), lhs, rhs, lhs <= rhs + slack};
}

}  // namespace

double explicit_constant(const ExponentTuple& alpha, const std::vector<ExponentTuple>& claims,
                         const CombinationWeights& weights) {
  if (Eigen::Index(claims.size()) != weights.size())
    raise(ErrorCode::LengthMismatch, "one weight per claim is required");
  check_combination(alpha, claims, weights);
  double c = 0.0;
  for (const auto& claim : claims) {
    if (claim.size() != alpha.size())
      raise(ErrorCode::LengthMismatch, "claims must share the target's length");
    const int j = argmin_index(claim);
    c = std::max(c, std::pow(2.0, 1.0 - claim[j]) / (1.0 - std::pow(2.0, -alpha[j])));
  }
  return c;
}

TheoremReport verify_theorem(const Kernel& kernel, const std::vector<EstimateClaim>& claims,
                             const CombinationWeights& weights, const ExponentTuple& alpha,
                             int threads) {
  if (claims.empty()) raise(ErrorCode::InvalidInput, "at least one claim is required");
  const double c = explicit_constant(alpha, claim_tuples(claims), weights);
  const double a = restricted_weak_constant_exhaustive(kernel, alpha, threads).bound;
  const double product = bound_product(claims, weights);
  const double allowed = c * product;
  return TheoremReport{alpha,   claims, weights,           a, c, product, a <= allowed + kPassSlack,
                       allowed - a};
}

bool ProofTrace::all_ok() const {
  if (!halves_ok) return false;
  for (const auto& check : checks)
    if (!check.ok) return false;
  return true;
}

ProofTrace trace_proof(const Kernel& kernel, const std::vector<EstimateClaim>& claims,
                       const CombinationWeights& weights, const ExponentTuple& alpha,
                       double epsilon, int threads) {
  if (claims.empty()) raise(ErrorCode::InvalidInput, "at least one claim is required");
  if (!(epsilon > 0.0)) raise(ErrorCode::InvalidInput, "epsilon must be positive");
  check_combination(alpha, claim_tuples(claims), weights);

  const EstimateClaim exhaustive = restricted_weak_constant_exhaustive(kernel, alpha, threads);
  const double product = bound_product(claims, weights);
  const double a_normalized = exhaustive.bound == 0.0 ? 0.0 : exhaustive.bound / product;
  if (!std::isfinite(a_normalized))
    raise(ErrorCode::InvalidInput, "claim bounds vanish while the form does not");
  if (epsilon >= a_normalized)
    raise(ErrorCode::EpsilonTooLarge, "no witness clears the quotient threshold");

  ProofTrace trace;
  trace.epsilon = epsilon;
  trace.a_normalized = a_normalized;

  // Witness sets: lexicographically smallest tuple whose plain quotient
  // reaches (a - eps) * prod B^theta; the argmax qualifies, so one exists.
  const double threshold = (a_normalized - epsilon) * product;
  auto witness = first_witness_above(kernel, alpha, threshold, threads);
  trace.witnesses = witness ? std::move(*witness) : *exhaustive.witness;
  trace.checks.push_back(make_check("witness_quotient_threshold", threshold,
                                    char_quotient(kernel, alpha, trace.witnesses), 0.0));

  // Q both ways: by definition, and factored through the claims.
  trace.q = product * measure_power_product(trace.witnesses, alpha.entries());
  double factored = 1.0;
  std::vector<double> claim_terms(claims.size());
  for (std::size_t s = 0; s < claims.size(); ++s) {
    claim_terms[s] =
        claims[s].bound * measure_power_product(trace.witnesses, claims[s].tuple.entries());
    factored *= std::pow(claim_terms[s], weights[Eigen::Index(s)]);
  }
  trace.checks.push_back(make_check("q_geometric_mean_identity", std::abs(trace.q - factored),
                                    kRelSlack * std::max(trace.q, factored), 0.0));

  // Pivot claim: first s with B_s * prod mu^{alpha^{(s)}} at or below Q.
  int s0 = -1;
  for (std::size_t s = 0; s < claims.size(); ++s) {
    if (claim_terms[s] <= trace.q * (1.0 + kHalfSlack)) {
      s0 = int(s);
      break;
    }
  }
  if (s0 < 0)
    raise(ErrorCode::InvalidInput, "no claim term at or below Q: the geometric mean identity failed");
  trace.s0_index = s0;
  trace.checks.push_back(
      make_check("pivot_claim_below_q", claim_terms[std::size_t(s0)], trace.q, kHalfSlack * trace.q));

  const ExponentTuple& pivot = claims[std::size_t(s0)].tuple;
  const int j = argmin_index(pivot);
  trace.bad_index = j;
  const SubsetWitness& ej = trace.witnesses[std::size_t(j)];
  const double mu_ej = measure_of(ej.space, ej);

  std::vector<SimpleFunction> chis;
  chis.reserve(trace.witnesses.size());
  for (const auto& e : trace.witnesses) chis.push_back(indicator(e));
  trace.f = adjoint_apply(kernel, j, adjoint_arguments(j, chis));

  // Weak-norm chain: ||F||_{1/(1-a_j),inf} <= B_{s0} prod_{i!=j} mu^{a_i}
  //                                         <= Q * mu_j(E_j)^{-a_j}.
  const double weak = weak_norm(trace.f, Exponent(1.0 / (1.0 - pivot[j])));
  double partial = 1.0;
  for (std::size_t i = 0; i < trace.witnesses.size(); ++i)
    if (int(i) != j)
      partial *= std::pow(measure_of(trace.witnesses[i].space, trace.witnesses[i]),
                          pivot[Eigen::Index(i)]);
  const double claim_side = claims[std::size_t(s0)].bound * partial;
  const double q_side = trace.q * std::pow(mu_ej, -pivot[j]);
  trace.checks.push_back(make_check("weak_norm_vs_claim", weak, claim_side,
                                    kRelSlack * std::max(1.0, claim_side)));
  trace.checks.push_back(
      make_check("claim_vs_q_scale", claim_side, q_side, kHalfSlack * std::abs(q_side)));

  // Split E_j at the threshold; Chebyshev collapses to half the measure.
  trace.lambda_threshold = std::pow(2.0, 1.0 - pivot[j]) * trace.q / mu_ej;
  std::vector<Eigen::Index> high, low;
  for (const Eigen::Index x : ej.members) {
    if (std::abs(trace.f.values[x]) >= trace.lambda_threshold)
      high.push_back(x);
    else
      low.push_back(x);
  }
  trace.eprime = make_subset(ej.space, high);
  const double mu_high = measure_of(ej.space, trace.eprime);
  const ProofCheck half =
      make_check("half_measure", mu_high, 0.5 * mu_ej, kHalfSlack * 0.5 * mu_ej);
  trace.halves_ok = half.ok;
  trace.checks.push_back(half);

  // The two summands of the final estimate.
  auto form_with_slot_j = [&](const SubsetWitness& part) {
    std::vector<SimpleFunction> fs = chis;
    fs[std::size_t(j)] = indicator(part);
    return std::abs(evaluate_form(kernel, fs));
  };
  trace.split_low = form_with_slot_j(make_subset(ej.space, low));
  trace.split_high = form_with_slot_j(trace.eprime);

  const double low_bound = std::pow(2.0, 1.0 - pivot[j]) * trace.q;
  const double high_bound = std::pow(2.0, -alpha[j]) * a_normalized * trace.q;
  trace.checks.push_back(
      make_check("split_low_bound", trace.split_low, low_bound, kRelSlack * low_bound));
  trace.checks.push_back(
      make_check("split_high_bound", trace.split_high, high_bound, kRelSlack * high_bound));
  trace.checks.push_back(make_check("epsilon_split", (a_normalized - epsilon) * trace.q,
                                    trace.split_low + trace.split_high,
                                    kRelSlack * std::max(1.0, trace.q)));
  return trace;
}

}  // namespace mint
