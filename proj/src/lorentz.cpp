#include "mint/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mint/summation.hpp"

namespace mint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Indices sorted by decreasing |f|, ties by increasing index.
std::vector<Eigen::Index> decreasing_order(const Eigen::ArrayXcd& values) {
  std::vector<Eigen::Index> order(std::size_t(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double fa = std::abs(values[a]);
    const double fb = std::abs(values[b]);
    if (fa != fb) return fa > fb;
    return a < b;
  });
  return order;
}

double max_abs(const SimpleFunction& f) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i) m = std::max(m, std::abs(f.values[i]));
  return m;
}

}  // namespace

Exponent::Exponent(double value) : value_(value) {
  if (!(value > 0.0))
    raise(ErrorCode::ExponentOutOfRange, "exponent must be strictly positive");
}

Exponent Exponent::inf() noexcept {
  Exponent p;
  p.value_ = kInf;
  return p;
}

bool Exponent::is_inf() const noexcept { return value_ == kInf; }

double dual_exponent(Exponent p) noexcept {
  if (p.is_inf()) return 1.0;
  const double recip = 1.0 - 1.0 / p.value();
  if (recip == 0.0) return kInf;
  return 1.0 / recip;
}

double lp_norm(const SimpleFunction& f, Exponent p) {
  if (p.is_inf()) return max_abs(f);
  CompensatedSum s;
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    const double a = std::abs(f.values[i]);
    if (a > 0.0) s.add(std::pow(a, p.value()) * f.space.weights()[i]);
  }
  const double total = s.value();
  if (total == 0.0) return 0.0;
  return std::pow(total, 1.0 / p.value());
}

double weak_norm(const SimpleFunction& f, Exponent p) {
  if (p.is_inf()) return max_abs(f);
  const auto order = decreasing_order(f.values);
  CompensatedSum cumulative;
  double best = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double v = std::abs(f.values[order[k]]);
    cumulative.add(f.space.weights()[order[k]]);
    const bool block_end =
        k + 1 == order.size() || std::abs(f.values[order[k + 1]]) != v;
    if (block_end && v > 0.0)
      best = std::max(best, v * std::pow(cumulative.value(), 1.0 / p.value()));
  }
  return best;
}

double lorentz1_rearrangement(const SimpleFunction& f, Exponent p) {
  if (p.is_inf() || p.value() < 1.0)
    raise(ErrorCode::ExponentOutOfRange, "layer integral needs 1 <= p < inf");
  const auto order = decreasing_order(f.values);
  CompensatedSum cumulative;
  CompensatedSum integral;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double v = std::abs(f.values[order[k]]);
    if (v == 0.0) break;
    cumulative.add(f.space.weights()[order[k]]);
    const bool block_end =
        k + 1 == order.size() || std::abs(f.values[order[k + 1]]) != v;
    if (block_end) {
      const double next =
          k + 1 == order.size() ? 0.0 : std::abs(f.values[order[k + 1]]);
      integral.add((v - next) * std::pow(cumulative.value(), 1.0 / p.value()));
    }
  }
  return integral.value();
}

// Exact evaluation of the dual pairing. Any admissible |g|, read along the
// order pi that sorts its values decreasingly, is dominated by the profile
// g(pi(k)) = t_k^(-1/p') with t_k the running measure, and that profile is
// itself admissible. The sup is therefore a maximum over orders of the
// support, which collapses to a dynamic program over subsets because the
// running measure only depends on the set of points already placed.
double lorentz1_dual(const SimpleFunction& f, Exponent p) {
  if (p.is_inf() || p.value() <= 1.0)
    raise(ErrorCode::ExponentOutOfRange, "dual pairing needs 1 < p < inf");
  const double beta = 1.0 - 1.0 / p.value();  // 1/p'

  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (std::abs(f.values[i]) > 0.0) support.push_back(i);
  const std::size_t n = support.size();
  if (n == 0) return 0.0;
  if (n > 20)
    raise(ErrorCode::SpaceTooLarge, "dual pairing supports at most 20 non-zero points");

  std::vector<double> contrib(n), weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    weight[i] = f.space.weights()[support[i]];
    contrib[i] = std::abs(f.values[support[i]]) * weight[i];
  }

  const std::size_t states = std::size_t(1) << n;
  std::vector<double> running(states, 0.0);
  std::vector<double> best(states, 0.0);
  for (std::size_t s = 1; s < states; ++s) {
    const std::size_t low = s & (s - 1);
    const int bit = std::countr_zero(s);
    running[s] = running[low] + weight[std::size_t(bit)];
    const double scale = std::pow(running[s], -beta);
    double value = -kInf;
    std::size_t rest = s;
    while (rest) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      value = std::max(value, best[s & ~(std::size_t(1) << x)] + contrib[std::size_t(x)] * scale);
    }
    best[s] = value;
  }
  return best[states - 1];
}

}  // namespace mint
