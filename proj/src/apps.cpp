#include "mint/apps.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mint/rng.hpp"

namespace mint {

namespace {

MeasureSpace unit_grid(Eigen::Index n, const std::string& id) {
  return MeasureSpace(id, Eigen::ArrayXd::Ones(n));
}

Eigen::Index periodic_distance(Eigen::Index a, Eigen::Index b, Eigen::Index side) {
  const Eigen::Index d = std::abs(a - b);
  return std::min(d, side - d);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Kernel make_wolff_pair(Eigen::Index n) {
  if (n < 2) raise(ErrorCode::GridTooSmall, "the grid needs at least two points");
  const MeasureSpace grid = unit_grid(n, "grid" + std::to_string(n));
  Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(n * n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y) {
      const Eigen::Index d = std::abs(x - y);
      if (d > 0 && 2 * d <= n) values[x * n + y] = Complex(1.0 / double(y - x), 0.0);
    }
  return Kernel({grid, grid}, std::move(values));
}

namespace {

void validate(const CZConfig& config) {
  if (config.m < 1 || config.grid < 2 || !(config.c_size > 0.0) || !(config.c_grad > 0.0) ||
      !(config.eps_trunc > 0.0))
    raise(ErrorCode::ConfigInvalid,
          "need m >= 1, grid >= 2, and positive size, gradient and truncation constants");
}

// Sum of pairwise periodic distances over ordered pairs of coordinates.
double pair_distance_sum(const std::vector<Eigen::Index>& idx, Eigen::Index side) {
  double total = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b) total += double(periodic_distance(idx[a], idx[b], side));
  return total;
}

void advance(std::vector<Eigen::Index>& idx, Eigen::Index side) {
  for (std::size_t slot = idx.size(); slot-- > 0;) {
    if (++idx[slot] < side) return;
    idx[slot] = 0;
  }
}

std::vector<MeasureSpace> cz_spaces(const CZConfig& config) {
  std::vector<MeasureSpace> spaces;
  const MeasureSpace grid = unit_grid(config.grid, "cz" + std::to_string(config.grid));
  for (int slot = 0; slot <= config.m; ++slot) spaces.push_back(grid);
  return spaces;
}

}  // namespace

Kernel make_cz_kernel(const CZConfig& config, std::uint64_t seed) {
  validate(config);
  Rng rng(seed);
  const auto spaces = cz_spaces(config);
  Eigen::Index total = 1;
  for (int slot = 0; slot <= config.m; ++slot) total *= config.grid;

  Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(total);
  std::vector<Eigen::Index> idx(std::size_t(config.m) + 1, 0);
  std::vector<double> dist(std::size_t(total), 0.0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    const Complex draw = rng.unit_disk();  // consumed even inside the cutoff
    dist[std::size_t(flat)] = pair_distance_sum(idx, config.grid);
    if (dist[std::size_t(flat)] >= config.eps_trunc)
      values[flat] = draw * std::pow(dist[std::size_t(flat)], -double(config.m));
    advance(idx, config.grid);
  }

  // Global rescale so both checked bounds hold with margin to spare.
  double worst_size = 0.0;
  for (Eigen::Index flat = 0; flat < total; ++flat)
    if (dist[std::size_t(flat)] >= config.eps_trunc)
      worst_size = std::max(worst_size,
                            std::abs(values[flat]) * std::pow(dist[std::size_t(flat)], config.m));

  const Kernel shape(spaces, Eigen::ArrayXcd::Zero(total));  // for strides only
  double worst_grad = 0.0;
  std::fill(idx.begin(), idx.end(), 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    if (dist[std::size_t(flat)] >= config.eps_trunc) {
      for (int slot = 0; slot <= config.m; ++slot) {
        std::vector<Eigen::Index> next = idx;
        next[std::size_t(slot)] = (next[std::size_t(slot)] + 1) % config.grid;
        const Eigen::Index nflat = shape.flat_index(next);
        if (dist[std::size_t(nflat)] >= config.eps_trunc) {
          const double step = std::abs(values[nflat] - values[flat]);
          const double scale =
              std::min(dist[std::size_t(flat)], dist[std::size_t(nflat)]);
          worst_grad = std::max(worst_grad, step * std::pow(scale, config.m + 1));
        }
      }
    }
    advance(idx, config.grid);
  }

  double factor = 1.0;
  if (worst_size > 0.0) factor = std::min(factor, config.c_size / worst_size);
  if (worst_grad > 0.0) factor = std::min(factor, config.c_grad / worst_grad);
  values *= factor * (1.0 - 1e-9);
  return Kernel(spaces, std::move(values));
}

CzCheckResult check_cz_bounds(const Kernel& kernel, const CZConfig& config) {
  validate(config);
  if (kernel.arity() != config.m)
    raise(ErrorCode::GeometryMissing, "kernel arity does not match the config");
  for (const auto& space : kernel.spaces())
    if (space.size() != config.grid)
      raise(ErrorCode::GeometryMissing, "kernel grids do not match the config");

  const Eigen::Index total = kernel.values().size();
  std::vector<double> dist(std::size_t(total), 0.0);
  std::vector<Eigen::Index> idx(std::size_t(config.m) + 1, 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    dist[std::size_t(flat)] = pair_distance_sum(idx, config.grid);
    advance(idx, config.grid);
  }

  std::fill(idx.begin(), idx.end(), 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    if (dist[std::size_t(flat)] >= config.eps_trunc) {
      const double allowed = config.c_size * std::pow(dist[std::size_t(flat)], -double(config.m));
      const double measured = std::abs(kernel.values()[flat]);
      if (measured > allowed)
        return CzCheckResult{false, flat, "size", measured, allowed};
      for (int slot = 0; slot <= config.m; ++slot) {
        std::vector<Eigen::Index> next = idx;
        next[std::size_t(slot)] = (next[std::size_t(slot)] + 1) % config.grid;
        const Eigen::Index nflat = kernel.flat_index(next);
        if (dist[std::size_t(nflat)] >= config.eps_trunc) {
          const double step = std::abs(kernel.values()[nflat] - kernel.values()[flat]);
          const double base = std::min(dist[std::size_t(flat)], dist[std::size_t(nflat)]);
          const double grad_allowed = config.c_grad * std::pow(base, -double(config.m) - 1.0);
          if (step > grad_allowed)
            return CzCheckResult{false, flat, "gradient", step, grad_allowed};
        }
      }
    }
    advance(idx, config.grid);
  }
  return CzCheckResult{};
}

namespace {

void validate(const BHTConfig& config) {
  if (config.n < 3) raise(ErrorCode::ConfigInvalid, "the group needs at least three elements");
  if (!(config.eps >= 1 && config.eps <= config.tmax && 2 * config.tmax < config.n))
    raise(ErrorCode::ConfigInvalid, "need 1 <= eps <= tmax < n/2");
  const std::int64_t a = mod(config.alpha, config.n);
  const std::int64_t b = mod(config.beta, config.n);
  if (a == 0 || b == 0 || a == b)
    raise(ErrorCode::ConfigInvalid, "alpha and beta must be distinct and nonzero mod n");
}

}  // namespace

Kernel make_bht_form(const BHTConfig& config) {
  validate(config);
  const Eigen::Index n = config.n;
  const MeasureSpace group = unit_grid(n, "bht" + std::to_string(n));
  Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(n * n * n);
  for (Eigen::Index x = 0; x < n; ++x)
    for (std::int64_t t = -config.tmax; t <= config.tmax; ++t) {
      if (std::abs(t) < config.eps) continue;
      const Eigen::Index x1 = mod(x - config.alpha * t, n);
      const Eigen::Index x2 = mod(x - config.beta * t, n);
      values[(x * n + x1) * n + x2] += Complex(1.0 / double(t), 0.0);
    }
  return Kernel({group, group, group}, std::move(values));
}

double bht_adjoint_identity_residual(const BHTConfig& config) {
  const Kernel form = make_bht_form(config);
  const BHTConfig first{config.n, -config.alpha, config.beta - config.alpha, config.eps,
                        config.tmax};
  const BHTConfig second{config.n, config.alpha - config.beta, -config.beta, config.eps,
                         config.tmax};
  const Kernel counterparts[2] = {make_bht_form(first), make_bht_form(second)};

  const MeasureSpace& group = form.space(0);
  const Eigen::Index n = group.size();
  auto point_mass = [&](Eigen::Index at) {
    Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(n);
    values[at] = Complex(1.0, 0.0);
    return SimpleFunction{group, std::move(values)};
  };

  double residual = 0.0;
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v) {
      const std::vector<SimpleFunction> basis = {point_mass(u), point_mass(v)};
      for (int which = 0; which < 2; ++which) {
        const SimpleFunction via_adjoint = adjoint_apply(form, which + 1, basis);
        const SimpleFunction direct = adjoint_apply(counterparts[which], 0, basis);
        residual = std::max(residual,
                            (via_adjoint.values - direct.values).abs().maxCoeff());
      }
    }
  return residual;
}

}  // namespace mint
