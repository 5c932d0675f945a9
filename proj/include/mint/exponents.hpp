//
// Project     : mint
// Module      : exponents
// Description : exponent tuples on the hyperplane sum(alpha) = 1 and the
//               convex geometry of families of them
//
#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "mint/errors.hpp"

namespace mint {

// A tuple (alpha_0, ..., alpha_m) with every entry <= 1, entries summing to
// one, and at most one non-positive entry.
class ExponentTuple {
 public:
  explicit ExponentTuple(Eigen::VectorXd entries);  // validates

  const Eigen::VectorXd& entries() const noexcept { return entries_; }
  double operator[](Eigen::Index i) const { return entries_[i]; }
  Eigen::Index size() const noexcept { return entries_.size(); }
  int arity() const noexcept { return int(entries_.size()) - 1; }

 private:
  Eigen::VectorXd entries_;
};

ExponentTuple validate_tuple(const std::vector<double>& entries);

bool operator==(const ExponentTuple& a, const ExponentTuple& b);

struct Classification {
  bool good;      // every entry strictly inside (0, 1)
  int bad_index;  // smallest argmin; meaningful when !good
};

Classification classify(const ExponentTuple& t);

// Smallest index attaining the minimum entry. Defined for every tuple; for a
// bad tuple this is the unique non-positive slot.
int argmin_index(const ExponentTuple& t);

// Barycentric weights: theta_s in [0,1], summing to one.
class CombinationWeights {
 public:
  explicit CombinationWeights(Eigen::VectorXd thetas);

  const Eigen::VectorXd& thetas() const noexcept { return thetas_; }
  double operator[](Eigen::Index s) const { return thetas_[s]; }
  Eigen::Index size() const noexcept { return thetas_.size(); }

 private:
  Eigen::VectorXd thetas_;
};

ExponentTuple convex_combination(const std::vector<ExponentTuple>& tuples,
                                 const CombinationWeights& weights);

// Finds barycentric weights expressing target over the given tuples, or
// nullopt when target lies outside their convex hull. Among all solutions the
// one maximising min_s theta_s is returned.
std::optional<CombinationWeights> solve_combination(const ExponentTuple& target,
                                                    const std::vector<ExponentTuple>& tuples);

// Relative-interior test within the hyperplane sum(x) = 1: probes
// target +- delta * (e_i - e_{i+1}) for every coordinate difference and
// reports whether all probes stay inside the hull.
bool interior_membership(const Eigen::VectorXd& target, const std::vector<ExponentTuple>& tuples,
                         double delta = 1e-6);
bool interior_membership(const ExponentTuple& target, const std::vector<ExponentTuple>& tuples,
                         double delta = 1e-6);

// One face of a hull, as the inequality normal . x <= offset (valid on the
// hyperplane sum(x) = 1; the normal is scaled to unit length).
struct Facet {
  Eigen::VectorXd normal;
  double offset;
};

struct RegionGridPoint {
  Eigen::VectorXd x;
  bool inside;
};

// The deduced region of good tuples in the open hull of a claim family:
// the claims and probe delta form the membership oracle, samples hold the
// accepted grid tuples, grid holds every candidate with its flag.
struct RegionDescription {
  std::vector<ExponentTuple> claims;
  double delta = 1e-6;
  int resolution = 0;
  std::optional<std::vector<Facet>> facets;  // present for arity <= 3
  std::vector<ExponentTuple> samples;
  std::vector<RegionGridPoint> grid;

  bool contains(const ExponentTuple& t) const;
};

RegionDescription deduce_strong_region(const std::vector<ExponentTuple>& claims, int resolution,
                                       double delta = 1e-6, int threads = 1);

}  // namespace mint
