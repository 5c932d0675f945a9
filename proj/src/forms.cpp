#include "mint/forms.hpp"

#include <cmath>
#include <string>

#include "mint/summation.hpp"

namespace mint {

namespace {

// Functions premultiplied by their weights, one per slot.
std::vector<Eigen::ArrayXcd> weighted(const std::vector<SimpleFunction>& fs) {
  std::vector<Eigen::ArrayXcd> wf;
  wf.reserve(fs.size());
  for (const auto& f : fs) wf.push_back(f.values * f.space.weights().cast<Complex>());
  return wf;
}

void advance(std::vector<Eigen::Index>& idx, const std::vector<Eigen::Index>& dims) {
  for (std::size_t slot = idx.size(); slot-- > 0;) {
    if (++idx[slot] < dims[slot]) return;
    idx[slot] = 0;
  }
}

}  // namespace

Kernel::Kernel(std::vector<MeasureSpace> spaces, Eigen::ArrayXcd values)
    : spaces_(std::move(spaces)), values_(std::move(values)) {
  if (spaces_.size() < 2) raise(ErrorCode::InvalidInput, "a kernel needs at least two slots");
  dims_.reserve(spaces_.size());
  for (const auto& s : spaces_) dims_.push_back(s.size());
  strides_.assign(spaces_.size(), 1);
  for (std::size_t slot = spaces_.size() - 1; slot-- > 0;)
    strides_[slot] = strides_[slot + 1] * dims_[slot + 1];
  const Eigen::Index total = strides_[0] * dims_[0];
  if (values_.size() != total)
    raise(ErrorCode::LengthMismatch, "kernel has " + std::to_string(values_.size()) +
                                         " values, the grid has " + std::to_string(total));
  for (Eigen::Index i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag()))
      raise(ErrorCode::InvalidInput, "kernel values must be finite");
}

Eigen::Index Kernel::flat_index(const std::vector<Eigen::Index>& idx) const {
  Eigen::Index flat = 0;
  for (std::size_t slot = 0; slot < idx.size(); ++slot) flat += idx[slot] * strides_[slot];
  return flat;
}

Complex evaluate_form(const Kernel& kernel, const std::vector<SimpleFunction>& fs) {
  const std::size_t slots = kernel.spaces().size();
  if (fs.size() != slots)
    raise(ErrorCode::LengthMismatch, "the form takes one function per slot");
  for (std::size_t slot = 0; slot < slots; ++slot)
    if (fs[slot].space != kernel.space(int(slot)))
      raise(ErrorCode::SpaceMismatch, "function " + std::to_string(slot) + " lives elsewhere");

  const auto wf = weighted(fs);
  std::vector<Eigen::Index> idx(slots, 0);
  CompensatedComplexSum acc;
  for (Eigen::Index flat = 0; flat < kernel.values().size(); ++flat) {
    Complex term = kernel.values()[flat];
    if (term != Complex(0.0, 0.0)) {
      for (std::size_t slot = 0; slot < slots; ++slot) term *= wf[slot][idx[slot]];
      acc.add(term);
    }
    advance(idx, kernel.dims());
  }
  return acc.value();
}

SimpleFunction adjoint_apply(const Kernel& kernel, int j, const std::vector<SimpleFunction>& gs) {
  const int m = kernel.arity();
  if (j < 0 || j > m) raise(ErrorCode::SlotOutOfRange, "adjoint slot out of range");
  if (gs.size() != std::size_t(m))
    raise(ErrorCode::LengthMismatch, "the adjoint takes one function per remaining slot");

  // Undo the pairing order (g_1, ..., g_{j-1}, g_0, g_{j+1}, ..., g_m): for
  // j = 0 entry l fills slot l+1; otherwise entry j-1 fills slot 0 and the
  // rest fill slots 1..m in order, skipping j.
  std::vector<const SimpleFunction*> slot_fn(std::size_t(m) + 1, nullptr);
  if (j == 0) {
    for (int l = 0; l < m; ++l) slot_fn[std::size_t(l + 1)] = &gs[std::size_t(l)];
  } else {
    int l = 0;
    for (int slot = 1; slot < j; ++slot) slot_fn[std::size_t(slot)] = &gs[std::size_t(l++)];
    slot_fn[0] = &gs[std::size_t(l++)];
    for (int slot = j + 1; slot <= m; ++slot) slot_fn[std::size_t(slot)] = &gs[std::size_t(l++)];
  }

  std::vector<Eigen::ArrayXcd> wf(std::size_t(m) + 1);
  for (int slot = 0; slot <= m; ++slot) {
    if (slot == j) continue;
    const SimpleFunction& g = *slot_fn[std::size_t(slot)];
    if (g.space != kernel.space(slot))
      raise(ErrorCode::SpaceMismatch, "adjoint argument for slot " + std::to_string(slot) +
                                          " lives elsewhere");
    wf[std::size_t(slot)] = g.values * g.space.weights().cast<Complex>();
  }

  const MeasureSpace& out_space = kernel.space(j);
  std::vector<CompensatedComplexSum> out(std::size_t(out_space.size()));
  std::vector<Eigen::Index> idx(std::size_t(m) + 1, 0);
  for (Eigen::Index flat = 0; flat < kernel.values().size(); ++flat) {
    Complex term = kernel.values()[flat];
    if (term != Complex(0.0, 0.0)) {
      for (int slot = 0; slot <= m; ++slot)
        if (slot != j) term *= wf[std::size_t(slot)][idx[std::size_t(slot)]];
      out[std::size_t(idx[std::size_t(j)])].add(term);
    }
    advance(idx, kernel.dims());
  }

  Eigen::ArrayXcd values(out_space.size());
  for (Eigen::Index i = 0; i < out_space.size(); ++i) values[i] = out[std::size_t(i)].value();
  return SimpleFunction{out_space, std::move(values)};
}

}  // namespace mint
