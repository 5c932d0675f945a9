#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "mint/lorentz.hpp"
#include "testutil.hpp"

using namespace mint;
using testutil::code_of;

namespace {

// Independent sweep: the sup is attained at an attained value of |f|.
double oracle_weak(const SimpleFunction& f, double p) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    const double level = std::abs(f.values[i]);
    if (level == 0.0) continue;
    double mass = 0.0;
    for (Eigen::Index j = 0; j < f.values.size(); ++j)
      if (std::abs(f.values[j]) >= level) mass += f.space.weight(j);
    best = std::max(best, level * std::pow(mass, 1.0 / p));
  }
  return best;
}

// Independent layer sum, ascending with strict inequalities.
double oracle_rearrangement(const SimpleFunction& f, double p) {
  std::vector<double> levels{0.0};
  for (Eigen::Index i = 0; i < f.values.size(); ++i) levels.push_back(std::abs(f.values[i]));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    double mass = 0.0;
    for (Eigen::Index j = 0; j < f.values.size(); ++j)
      if (std::abs(f.values[j]) > levels[k]) mass += f.space.weight(j);
    integral += (levels[k + 1] - levels[k]) * std::pow(mass, 1.0 / p);
  }
  return integral;
}

// Exact sup over the dual ball by enumerating processing orders: for a fixed
// order the extremal dual function takes value W_k^{-1/p'} on the k-th atom,
// W_k the cumulative weight.
double oracle_dual(const SimpleFunction& f, double p) {
  const double beta = 1.0 - 1.0 / p;
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    if (f.values[i] != Complex(0.0, 0.0)) support.push_back(i);
  if (support.empty()) return 0.0;
  std::sort(support.begin(), support.end());
  double best = 0.0;
  do {
    double cumulative = 0.0;
    double total = 0.0;
    for (const Eigen::Index i : support) {
      cumulative += f.space.weight(i);
      total += std::abs(f.values[i]) * f.space.weight(i) * std::pow(cumulative, -beta);
    }
    best = std::max(best, total);
  } while (std::next_permutation(support.begin(), support.end()));
  return best;
}

SimpleFunction real_function(const MeasureSpace& space, const std::vector<double>& values) {
  Eigen::ArrayXcd v(Eigen::Index(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[Eigen::Index(i)] = Complex(values[i], 0.0);
  return make_function(space, std::move(v));
}

}  // namespace

TEST_CASE("exponents validate") {
  CHECK(code_of([] { Exponent(0.0); }) == ErrorCode::ExponentOutOfRange);
  CHECK(code_of([] { Exponent(-1.0); }) == ErrorCode::ExponentOutOfRange);
  CHECK(Exponent::inf().is_inf());
  CHECK(!Exponent(2.0).is_inf());
  CHECK(dual_exponent(Exponent(2.0)) == doctest::Approx(2.0));
  CHECK(dual_exponent(Exponent(4.0)) == doctest::Approx(4.0 / 3.0));
  CHECK(std::isinf(dual_exponent(Exponent(1.0))));
  CHECK(dual_exponent(Exponent::inf()) == doctest::Approx(1.0));
  CHECK(dual_exponent(Exponent(0.5)) == doctest::Approx(-1.0));
}

TEST_CASE("norms of a three-point staircase") {
  const MeasureSpace s = make_space({1.0, 1.0, 1.0});
  const SimpleFunction f = real_function(s, {3.0, 1.0, 0.0});

  CHECK(weak_norm(f, 1.0) == doctest::Approx(3.0));
  CHECK(weak_norm(f, 0.5) == doctest::Approx(4.0));
  CHECK(weak_norm(f, Exponent::inf()) == doctest::Approx(3.0));
  CHECK(lp_norm(f, 1.0) == doctest::Approx(4.0));
  CHECK(lp_norm(f, 2.0) == doctest::Approx(std::sqrt(10.0)));
  CHECK(lp_norm(f, Exponent::inf()) == doctest::Approx(3.0));
  CHECK(lorentz1_rearrangement(f, 2.0) == doctest::Approx(2.0 + std::sqrt(2.0)));
  CHECK(lorentz1_rearrangement(f, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("rearrangement and dual reject out-of-range exponents") {
  const MeasureSpace s = make_space({1.0, 1.0});
  const SimpleFunction f = real_function(s, {1.0, 2.0});
  CHECK(code_of([&] { lorentz1_rearrangement(f, 0.5); }) == ErrorCode::ExponentOutOfRange);
  CHECK(code_of([&] { lorentz1_rearrangement(f, Exponent::inf()); }) ==
        ErrorCode::ExponentOutOfRange);
  CHECK(code_of([&] { lorentz1_dual(f, 1.0); }) == ErrorCode::ExponentOutOfRange);
  CHECK(code_of([&] { lorentz1_dual(f, Exponent::inf()); }) == ErrorCode::ExponentOutOfRange);
}

TEST_CASE("dual caps the support size") {
  const MeasureSpace s = make_space(std::vector<double>(21, 1.0));
  const SimpleFunction f = indicator(full_subset(s));
  CHECK(code_of([&] { lorentz1_dual(f, 2.0); }) == ErrorCode::SpaceTooLarge);
}

TEST_CASE("dual of a four-point indicator at p=2") {
  const MeasureSpace s = make_space({1.0, 1.0, 1.0, 1.0});
  const SimpleFunction chi = indicator(full_subset(s));
  const double expected = 1.0 + std::pow(2.0, -0.5) + std::pow(3.0, -0.5) + 0.5;
  CHECK(lorentz1_dual(chi, 2.0) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(lorentz1_dual(chi, 2.0) == doctest::Approx(2.7844570503761734).epsilon(1e-13));
  // between mu(E)^{1/p} and p*mu(E)^{1/p}, the continuum extremes
  CHECK(lorentz1_dual(chi, 2.0) >= 2.0);
  CHECK(lorentz1_dual(chi, 2.0) <= 4.0);
}

TEST_CASE("weak norm matches the sweep oracle") {
  Rng rng(7001);
  for (int trial = 0; trial < 500; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function_with_ties(rng, s);
    const double p = rng.uniform(0.3, 4.0);
    const double got = weak_norm(f, p);
    const double want = oracle_weak(f, p);
    CHECK(got == doctest::Approx(want).epsilon(1e-9));
    // no level between the attained ones does better
    for (int probe = 0; probe < 8; ++probe) {
      const double level = rng.uniform(0.0, 3.0);
      if (level <= 0.0) continue;
      double mass = 0.0;
      for (Eigen::Index j = 0; j < f.values.size(); ++j)
        if (std::abs(f.values[j]) >= level) mass += s.weight(j);
      CHECK(level * std::pow(mass, 1.0 / p) <= got * (1.0 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("layer integral matches the ascending oracle") {
  Rng rng(7002);
  for (int trial = 0; trial < 500; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function_with_ties(rng, s);
    const double p = rng.uniform(1.0, 4.0);
    CHECK(lorentz1_rearrangement(f, p) ==
          doctest::Approx(oracle_rearrangement(f, p)).epsilon(1e-9));
  }
}

TEST_CASE("weak <= lp <= layer integral for p >= 1") {
  Rng rng(7003);
  for (int trial = 0; trial < 300; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function(rng, s);
    const double p = rng.uniform(1.0, 5.0);
    const double weak = weak_norm(f, p);
    const double lp = lp_norm(f, p);
    const double layer = lorentz1_rearrangement(f, p);
    CHECK(weak <= lp * (1.0 + 1e-12) + 1e-15);
    CHECK(lp <= layer * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("indicator identities hold bit for bit") {
  Rng rng(7004);
  for (int trial = 0; trial < 200; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 9), 0.25, 4.0);
    std::vector<Eigen::Index> members;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (rng.uniform() < 0.6) members.push_back(i);
    if (members.empty()) members.push_back(rng.uniform_int(0, s.size() - 1));
    const SubsetWitness e = make_subset(s, members);
    const SimpleFunction chi = indicator(e);
    const double p = rng.uniform(0.4, 5.0);
    const double expected = std::pow(measure_of(s, e), 1.0 / p);
    CHECK(lp_norm(chi, p) == expected);
    CHECK(weak_norm(chi, p) == expected);
    if (p >= 1.0) CHECK(lorentz1_rearrangement(chi, p) == expected);
  }
}

TEST_CASE("dual matches the permutation oracle on small supports") {
  Rng rng(7005);
  for (int trial = 0; trial < 200; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 5), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function_with_ties(rng, s);
    const double p = rng.uniform(1.05, 6.0);
    CHECK(lorentz1_dual(f, p) == doctest::Approx(oracle_dual(f, p)).epsilon(1e-12));
  }
}

TEST_CASE("dual dominates every feasible pairing") {
  Rng rng(7006);
  for (int trial = 0; trial < 200; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 2 + rng.uniform_int(0, 6), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function(rng, s);
    const double p = rng.uniform(1.1, 5.0);
    const double dual = lorentz1_dual(f, p);

    SimpleFunction g = testutil::random_function(rng, s, 0.0);
    const double gn = weak_norm(g, dual_exponent(p));
    if (gn == 0.0) continue;
    double pairing = 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      pairing += std::abs(f.values[i]) * (std::abs(g.values[i]) / gn) * s.weight(i);
    CHECK(pairing <= dual * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("dual over layer integral stays within [1, p]") {
  Rng rng(7007);
  for (const double p : {1.1, 1.5, 2.0, 4.0, 10.0}) {
    for (int trial = 0; trial < 100; ++trial) {
      const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
      const SimpleFunction f = testutil::random_function_with_ties(rng, s);
      const double layer = lorentz1_rearrangement(f, p);
      if (layer == 0.0) continue;
      const double ratio = lorentz1_dual(f, p) / layer;
      CHECK(ratio >= 1.0 - 1e-12);
      CHECK(ratio <= p + 1e-12);
    }
  }
}

TEST_CASE("power-of-two scaling is exact on real functions") {
  Rng rng(7008);
  for (int trial = 0; trial < 100; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
    std::vector<double> values(std::size_t(s.size()));
    for (auto& v : values) v = rng.uniform() < 0.2 ? 0.0 : rng.uniform(-2.0, 2.0);
    const SimpleFunction f = real_function(s, values);
    SimpleFunction g = f;
    g.values *= Complex(8.0, 0.0);
    const double p = rng.uniform(0.4, 5.0);
    CHECK(weak_norm(g, p) == 8.0 * weak_norm(f, p));
    if (p >= 1.0) CHECK(lorentz1_rearrangement(g, p) == 8.0 * lorentz1_rearrangement(f, p));
  }
}

TEST_CASE("complex scaling is homogeneous to rounding") {
  Rng rng(7009);
  for (int trial = 0; trial < 100; ++trial) {
    const MeasureSpace s = testutil::random_space(rng, 1 + rng.uniform_int(0, 7), 0.25, 4.0);
    const SimpleFunction f = testutil::random_function(rng, s);
    const Complex c = rng.gaussian();
    SimpleFunction g = f;
    g.values *= c;
    const double p = rng.uniform(0.4, 5.0);
    CHECK(weak_norm(g, p) == doctest::Approx(std::abs(c) * weak_norm(f, p)).epsilon(1e-12));
    CHECK(lp_norm(g, p) == doctest::Approx(std::abs(c) * lp_norm(f, p)).epsilon(1e-12));
  }
}

TEST_CASE("zero function has zero norms") {
  const MeasureSpace s = make_space({1.0, 2.0});
  const SimpleFunction z = make_function(s, Eigen::ArrayXcd::Zero(2));
  CHECK(lp_norm(z, 2.0) == 0.0);
  CHECK(weak_norm(z, 2.0) == 0.0);
  CHECK(lorentz1_rearrangement(z, 2.0) == 0.0);
  CHECK(lorentz1_dual(z, 2.0) == 0.0);
}
