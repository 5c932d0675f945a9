#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "mint/apps.hpp"
#include "mint/constants.hpp"
#include "testutil.hpp"

using namespace mint;
using testutil::code_of;

namespace {

Eigen::Index wrap_distance(Eigen::Index a, Eigen::Index b, Eigen::Index side) {
  const Eigen::Index d = std::abs(a - b);
  return std::min(d, side - d);
}

// Ordered-pair periodic distance sum, the D in the kernel bounds.
double distance_sum(const std::vector<Eigen::Index>& idx, Eigen::Index side) {
  double total = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (a != b) total += double(wrap_distance(idx[a], idx[b], side));
  return total;
}

std::vector<Eigen::Index> unflatten(const Kernel& k, Eigen::Index flat) {
  std::vector<Eigen::Index> idx;
  for (std::size_t s = 0; s < k.dims().size(); ++s) {
    idx.push_back(flat / k.strides()[s]);
    flat %= k.strides()[s];
  }
  return idx;
}

}  // namespace

TEST_CASE("two-point singular pair by hand") {
  const Kernel k = make_wolff_pair(2);
  CHECK(k.space(0).id() == "grid2");
  CHECK(k.space(0).weights().size() == 2);
  CHECK(k.values()[0] == Complex(0, 0));
  CHECK(k.values()[1] == Complex(1, 0));
  CHECK(k.values()[2] == Complex(-1, 0));
  CHECK(k.values()[3] == Complex(0, 0));
}

TEST_CASE("singular pair is antisymmetric and truncated at half the grid") {
  for (const Eigen::Index n : {5, 8, 9}) {
    const Kernel k = make_wolff_pair(n);
    for (Eigen::Index x = 0; x < n; ++x) {
      CHECK(k.values()[x * n + x] == Complex(0, 0));
      for (Eigen::Index y = 0; y < n; ++y) {
        CHECK(k.values()[x * n + y] == -k.values()[y * n + x]);
        const Eigen::Index d = std::abs(x - y);
        if (d > 0 && 2 * d <= n) {
          CHECK(k.values()[x * n + y] == Complex(1.0 / double(y - x), 0.0));
        } else {
          CHECK(k.values()[x * n + y] == Complex(0, 0));
        }
      }
    }
  }
  CHECK(code_of([] { make_wolff_pair(1); }) == ErrorCode::GridTooSmall);
  CHECK(code_of([] { make_wolff_pair(0); }) == ErrorCode::GridTooSmall);
}

TEST_CASE("antisymmetry equates the two endpoint constants bit for bit") {
  const Kernel k = make_wolff_pair(8);
  const EstimateClaim left = restricted_weak_constant_exhaustive(k, validate_tuple({1.0, 0.0}));
  const EstimateClaim right = restricted_weak_constant_exhaustive(k, validate_tuple({0.0, 1.0}));
  CHECK(left.bound == right.bound);
  CHECK(left.bound > 0.0);
  REQUIRE(left.witness.has_value());
  REQUIRE(right.witness.has_value());
  // active slots find the same set; inert slots hold the full grid
  CHECK((*left.witness)[0].members == (*right.witness)[1].members);
  CHECK((*left.witness)[1].members == full_subset(k.space(1)).members);
  CHECK((*right.witness)[0].members == full_subset(k.space(0)).members);
}

TEST_CASE("generated singular kernels pass their own bounds") {
  const std::vector<CZConfig> configs = {
      CZConfig{2, 4, 1.0, 1.0, 1.0},
      CZConfig{1, 6, 0.7, 0.3, 2.5},
      CZConfig{3, 3, 1.2, 2.0, 1.0},
  };
  for (const auto& config : configs) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Kernel k = make_cz_kernel(config, seed);
      const CzCheckResult result = check_cz_bounds(k, config);
      CHECK(result.ok);
      CHECK(result.violation == -1);
      CHECK(result.kind.empty());
    }
  }
}

TEST_CASE("generated singular kernel shape and truncation") {
  const CZConfig config{2, 6, 1.0, 1.0, 1.0};
  const Kernel k = make_cz_kernel(config, 42);
  CHECK(k.arity() == 2);
  CHECK((k.dims() == std::vector<Eigen::Index>{6, 6, 6}));
  CHECK(k.space(0).id() == "cz6");
  CHECK(k.space(1) == k.space(0));

  // the diagonal sits inside the truncation radius
  for (Eigen::Index x = 0; x < 6; ++x)
    CHECK(k.values()[k.flat_index({x, x, x})] == Complex(0, 0));

  // every cell inside the radius is zero, every value obeys the size bound
  for (Eigen::Index flat = 0; flat < k.values().size(); ++flat) {
    const double d = distance_sum(unflatten(k, flat), 6);
    if (d < config.eps_trunc) {
      CHECK(k.values()[flat] == Complex(0, 0));
    } else {
      CHECK(std::abs(k.values()[flat]) <= config.c_size * std::pow(d, -2.0));
    }
  }

  // same seed reproduces, another seed differs
  const Kernel again = make_cz_kernel(config, 42);
  CHECK((again.values() == k.values()).all());
  const Kernel other = make_cz_kernel(config, 43);
  CHECK(!(other.values() == k.values()).all());

  // a giant truncation radius blanks the kernel
  CZConfig blank = config;
  blank.eps_trunc = 1e9;
  const Kernel zero = make_cz_kernel(blank, 42);
  CHECK((zero.values() == Complex(0, 0)).all());
}

TEST_CASE("planted size violation is reported at its cell") {
  const CZConfig config{2, 4, 1.0, 1.0, 1.0};
  const Kernel k = make_cz_kernel(config, 7);

  Eigen::Index target = -1;
  double d_target = 0.0;
  for (Eigen::Index flat = 0; flat < k.values().size(); ++flat) {
    const double d = distance_sum(unflatten(k, flat), 4);
    if (d >= config.eps_trunc) {
      target = flat;
      d_target = d;
      break;
    }
  }
  REQUIRE(target >= 0);

  const double allowed = config.c_size * std::pow(d_target, -2.0);
  Eigen::ArrayXcd doctored = k.values();
  doctored[target] = Complex(10.0 * allowed, 0.0);
  const CzCheckResult result = check_cz_bounds(Kernel(k.spaces(), doctored), config);
  CHECK(!result.ok);
  CHECK(result.violation == target);
  CHECK(result.kind == "size");
  CHECK(result.measured == doctest::Approx(10.0 * allowed));
  CHECK(result.allowed == doctest::Approx(allowed));
}

TEST_CASE("planted gradient violation is reported from its neighbour") {
  // smooth hand-built kernel at the size bound; flipping one sign leaves the
  // sizes alone but tears the step from (0,2) to (0,3)
  const CZConfig config{1, 6, 1.0, 2.0, 1.0};
  const MeasureSpace grid = make_space(std::vector<double>(6, 1.0), "cz6");
  Eigen::ArrayXcd values = Eigen::ArrayXcd::Zero(36);
  for (Eigen::Index x = 0; x < 6; ++x)
    for (Eigen::Index y = 0; y < 6; ++y) {
      const double d = 2.0 * double(wrap_distance(x, y, 6));
      if (d >= 1.0) values[x * 6 + y] = Complex(1.0 / d, 0.0);
    }
  const Kernel smooth({grid, grid}, values);
  CHECK(check_cz_bounds(smooth, config).ok);

  values[3] = -values[3];  // cell (0, 3)
  const CzCheckResult result = check_cz_bounds(Kernel({grid, grid}, values), config);
  CHECK(!result.ok);
  CHECK(result.violation == 2);  // detected when stepping out of (0, 2)
  CHECK(result.kind == "gradient");
  CHECK(result.measured == doctest::Approx(5.0 / 12.0));
  CHECK(result.allowed == doctest::Approx(1.0 / 8.0));
}

TEST_CASE("bound checker validates geometry and config") {
  const Kernel wolff = make_wolff_pair(8);
  CHECK(code_of([&] { check_cz_bounds(wolff, CZConfig{2, 8, 1.0, 1.0, 1.0}); }) ==
        ErrorCode::GeometryMissing);
  CHECK(code_of([&] { check_cz_bounds(wolff, CZConfig{1, 4, 1.0, 1.0, 1.0}); }) ==
        ErrorCode::GeometryMissing);

  CHECK(code_of([] { make_cz_kernel(CZConfig{0, 4, 1.0, 1.0, 1.0}, 0); }) ==
        ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_cz_kernel(CZConfig{2, 1, 1.0, 1.0, 1.0}, 0); }) ==
        ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_cz_kernel(CZConfig{2, 4, 0.0, 1.0, 1.0}, 0); }) ==
        ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_cz_kernel(CZConfig{2, 4, 1.0, -1.0, 1.0}, 0); }) ==
        ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_cz_kernel(CZConfig{2, 4, 1.0, 1.0, 0.0}, 0); }) ==
        ErrorCode::ConfigInvalid);
}

TEST_CASE("five-point bilinear transform by hand") {
  const BHTConfig config{5, 1, 2, 1, 2};
  const Kernel k = make_bht_form(config);
  CHECK(k.arity() == 2);
  CHECK((k.dims() == std::vector<Eigen::Index>{5, 5, 5}));
  CHECK(k.space(0).id() == "bht5");

  // x = 0 picks up one term per t in {-2, -1, 1, 2}
  CHECK(k.values()[k.flat_index({0, 2, 4})] == Complex(-0.5, 0.0));
  CHECK(k.values()[k.flat_index({0, 1, 2})] == Complex(-1.0, 0.0));
  CHECK(k.values()[k.flat_index({0, 4, 3})] == Complex(1.0, 0.0));
  CHECK(k.values()[k.flat_index({0, 3, 1})] == Complex(0.5, 0.0));

  int nonzero = 0;
  for (Eigen::Index flat = 0; flat < k.values().size(); ++flat)
    if (k.values()[flat] != Complex(0, 0)) ++nonzero;
  CHECK(nonzero == 20);  // four per base point

  // the odd kernel kills constants
  const SimpleFunction ones = indicator(full_subset(k.space(0)));
  const SimpleFunction out = adjoint_apply(k, 0, {ones, ones});
  CHECK(out.values.abs().maxCoeff() <= 1e-15);
}

TEST_CASE("bilinear transform rejects bad configs") {
  CHECK(code_of([] { make_bht_form(BHTConfig{2, 1, 2, 1, 1}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 1, 1, 1, 2}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 0, 2, 1, 2}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 5, 2, 1, 2}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 1, 2, 0, 2}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 1, 2, 3, 2}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{5, 1, 2, 1, 3}); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { make_bht_form(BHTConfig{6, 1, 7, 1, 2}); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("adjoint identities of the bilinear transform are exact") {
  CHECK(bht_adjoint_identity_residual(BHTConfig{5, 1, 2, 1, 2}) == 0.0);
  CHECK(bht_adjoint_identity_residual(BHTConfig{7, 1, 2, 1, 3}) == 0.0);
  CHECK(bht_adjoint_identity_residual(BHTConfig{5, 2, 4, 1, 2}) == 0.0);
  CHECK(bht_adjoint_identity_residual(BHTConfig{11, 3, 7, 2, 5}) <= 1e-12);
}
