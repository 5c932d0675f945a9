//
// Project     : mint
// Module      : forms
// Description : multilinear forms with explicit kernels and their adjoints
//
#pragma once

#include <vector>

#include "mint/spaces.hpp"

namespace mint {

// K(x_0, ..., x_m) stored flat in row-major order, slot 0 slowest. The form
// it induces is Lambda(f_0,...,f_m) = sum K * prod f_i(x_i) * prod mu_i(x_i).
class Kernel {
 public:
  Kernel(std::vector<MeasureSpace> spaces, Eigen::ArrayXcd values);

  int arity() const noexcept { return int(spaces_.size()) - 1; }
  const std::vector<MeasureSpace>& spaces() const noexcept { return spaces_; }
  const MeasureSpace& space(int slot) const { return spaces_[std::size_t(slot)]; }
  const Eigen::ArrayXcd& values() const noexcept { return values_; }
  const std::vector<Eigen::Index>& dims() const noexcept { return dims_; }
  const std::vector<Eigen::Index>& strides() const noexcept { return strides_; }

  Eigen::Index flat_index(const std::vector<Eigen::Index>& idx) const;

 private:
  std::vector<MeasureSpace> spaces_;
  std::vector<Eigen::Index> dims_;
  std::vector<Eigen::Index> strides_;
  Eigen::ArrayXcd values_;
};

Complex evaluate_form(const Kernel& kernel, const std::vector<SimpleFunction>& fs);

// T^{*j} applied to m functions, given in the pairing order
// (f_1, ..., f_{j-1}, f_0, f_{j+1}, ..., f_m); the result lives on space j
// and satisfies sum_x f_j(x) (T^{*j}...)(x) mu_j(x) = Lambda(f_0,...,f_m).
// T^{*0} is the operator T itself.
SimpleFunction adjoint_apply(const Kernel& kernel, int j, const std::vector<SimpleFunction>& gs);

}  // namespace mint
