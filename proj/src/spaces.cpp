#include "mint/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "mint/summation.hpp"

namespace mint {

namespace {

double total_of(const Eigen::ArrayXd& weights) {
  CompensatedSum s;
  for (Eigen::Index i = 0; i < weights.size(); ++i) s.add(weights[i]);
  return s.value();
}

}  // namespace

MeasureSpace::MeasureSpace(std::string id, Eigen::ArrayXd weights)
    : id_(std::move(id)), weights_(std::move(weights)) {
  if (weights_.size() == 0) raise(ErrorCode::EmptySpace, "a measure space needs at least one point");
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      raise(ErrorCode::NonpositiveWeight,
            "weight at index " + std::to_string(i) + " must be strictly positive and finite");
  }
  total_ = total_of(weights_);
}

bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
  if (a.id() != b.id() || a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a.weights()[i] != b.weights()[i]) return false;
  return true;
}

MeasureSpace make_space(const std::vector<double>& weights, std::string id) {
  Eigen::ArrayXd w(Eigen::Index(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) w[Eigen::Index(i)] = weights[i];
  return MeasureSpace(std::move(id), std::move(w));
}

SubsetWitness make_subset(const MeasureSpace& space, std::vector<Eigen::Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Eigen::Index i : members) {
    if (i < 0 || i >= space.size())
      raise(ErrorCode::InvalidInput, "subset index " + std::to_string(i) + " out of range");
  }
  return SubsetWitness{space, std::move(members)};
}

SubsetWitness full_subset(const MeasureSpace& space) {
  std::vector<Eigen::Index> members(std::size_t(space.size()));
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = Eigen::Index(i);
  return SubsetWitness{space, std::move(members)};
}

SubsetWitness subset_from_mask(const MeasureSpace& space, std::uint32_t mask) {
  std::vector<Eigen::Index> members;
  for (Eigen::Index i = 0; i < space.size(); ++i)
    if (mask & (std::uint32_t(1) << i)) members.push_back(i);
  return SubsetWitness{space, std::move(members)};
}

std::uint32_t mask_of(const SubsetWitness& subset) {
  std::uint32_t mask = 0;
  for (Eigen::Index i : subset.members) mask |= std::uint32_t(1) << i;
  return mask;
}

double measure_of(const MeasureSpace& space, const SubsetWitness& subset) {
  if (subset.space != space) raise(ErrorCode::SpaceMismatch, "subset belongs to a different space");
  CompensatedSum s;
  for (Eigen::Index i : subset.members) s.add(space.weights()[i]);
  return s.value();
}

SimpleFunction make_function(const MeasureSpace& space, Eigen::ArrayXcd values) {
  if (values.size() != space.size())
    raise(ErrorCode::LengthMismatch, "function has " + std::to_string(values.size()) +
                                         " values on a space of " + std::to_string(space.size()) +
                                         " points");
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag()))
      raise(ErrorCode::InvalidInput, "function values must be finite");
  }
  return SimpleFunction{space, std::move(values)};
}

SimpleFunction indicator(const SubsetWitness& subset) {
  Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(subset.space.size());
  for (Eigen::Index i : subset.members) values[i] = Complex(1.0, 0.0);
  return SimpleFunction{subset.space, std::move(values)};
}

}  // namespace mint
