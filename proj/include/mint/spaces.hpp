//
// Project     : mint
// Module      : spaces
// Description : finite measure spaces, index subsets, simple functions
//
#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mint/errors.hpp"

namespace mint {

using Complex = std::complex<double>;

// A finite measure space: n points with strictly positive weights. Immutable
// after construction; the total measure is fixed at construction time.
class MeasureSpace {
 public:
  MeasureSpace() = default;  // zero-point placeholder, filled in by assignment
  MeasureSpace(std::string id, Eigen::ArrayXd weights);

  const std::string& id() const noexcept { return id_; }
  const Eigen::ArrayXd& weights() const noexcept { return weights_; }
  Eigen::Index size() const noexcept { return weights_.size(); }
  double weight(Eigen::Index i) const { return weights_[i]; }
  double total_measure() const noexcept { return total_; }

 private:
  std::string id_;
  Eigen::ArrayXd weights_;
  double total_ = 0.0;
};

bool operator==(const MeasureSpace& a, const MeasureSpace& b);
inline bool operator!=(const MeasureSpace& a, const MeasureSpace& b) { return !(a == b); }

MeasureSpace make_space(const std::vector<double>& weights, std::string id = "");

// A subset of a space, stored as a strictly increasing index list. Most
// operations require the subset to be non-empty; ProofTrace::eprime is the
// one place an empty subset is legal.
struct SubsetWitness {
  MeasureSpace space;
  std::vector<Eigen::Index> members;
};

SubsetWitness make_subset(const MeasureSpace& space, std::vector<Eigen::Index> members);
SubsetWitness full_subset(const MeasureSpace& space);
SubsetWitness subset_from_mask(const MeasureSpace& space, std::uint32_t mask);
std::uint32_t mask_of(const SubsetWitness& subset);

double measure_of(const MeasureSpace& space, const SubsetWitness& subset);

// A complex-valued function given by its values at the points of a space.
struct SimpleFunction {
  MeasureSpace space;
  Eigen::ArrayXcd values;
};

SimpleFunction make_function(const MeasureSpace& space, Eigen::ArrayXcd values);
SimpleFunction indicator(const SubsetWitness& subset);

}  // namespace mint
