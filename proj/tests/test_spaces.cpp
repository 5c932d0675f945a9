#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <limits>

#include "doctest.h"
#include "mint/spaces.hpp"
#include "testutil.hpp"

using namespace mint;
using testutil::code_of;

TEST_CASE("space construction validates weights") {
  CHECK(code_of([] { make_space({}); }) == ErrorCode::EmptySpace);
  CHECK(code_of([] { make_space({1.0, 0.0}); }) == ErrorCode::NonpositiveWeight);
  CHECK(code_of([] { make_space({1.0, -2.0}); }) == ErrorCode::NonpositiveWeight);
  CHECK(code_of([] { make_space({std::numeric_limits<double>::infinity()}); }) ==
        ErrorCode::NonpositiveWeight);
  CHECK(code_of([] { make_space({std::numeric_limits<double>::quiet_NaN()}); }) ==
        ErrorCode::NonpositiveWeight);

  const MeasureSpace s = make_space({0.5, 1.5, 2.0}, "abc");
  CHECK(s.size() == 3);
  CHECK(s.id() == "abc");
  CHECK(s.total_measure() == doctest::Approx(4.0));
}

TEST_CASE("space equality compares id and weights bitwise") {
  const MeasureSpace a = make_space({1.0, 2.0}, "x");
  const MeasureSpace b = make_space({1.0, 2.0}, "x");
  const MeasureSpace c = make_space({1.0, 2.0}, "y");
  const MeasureSpace d = make_space({1.0, 2.5}, "x");
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != d);
}

TEST_CASE("subsets sort, dedupe and validate their members") {
  const MeasureSpace s = make_space({1.0, 1.0, 1.0, 1.0});
  const SubsetWitness e = make_subset(s, {3, 1, 1});
  CHECK(e.members == std::vector<Eigen::Index>{1, 3});
  CHECK(code_of([&] { make_subset(s, {4}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { make_subset(s, {-1}); }) == ErrorCode::InvalidInput);
  CHECK(make_subset(s, {}).members.empty());
  CHECK(full_subset(s).members == std::vector<Eigen::Index>{0, 1, 2, 3});
}

TEST_CASE("mask round trip") {
  const MeasureSpace s = make_space({1.0, 1.0, 1.0, 1.0, 1.0});
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    CHECK(mask_of(subset_from_mask(s, mask)) == mask);
  }
  CHECK(subset_from_mask(s, 0b10101).members == std::vector<Eigen::Index>{0, 2, 4});
}

TEST_CASE("measure_of checks the space and sums member weights") {
  const MeasureSpace s = make_space({0.25, 0.5, 1.0}, "s");
  CHECK(measure_of(s, make_subset(s, {0, 2})) == doctest::Approx(1.25));
  CHECK(measure_of(s, make_subset(s, {})) == 0.0);

  const MeasureSpace other = make_space({0.25, 0.5, 1.0}, "t");
  CHECK(code_of([&] { measure_of(other, make_subset(s, {0})); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("measure additivity is exact on dyadic weights") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const MeasureSpace s = testutil::random_dyadic_space(rng, 1 + rng.uniform_int(0, 11));
    std::vector<Eigen::Index> left, right;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      (rng.uniform() < 0.5 ? left : right).push_back(i);
    const double total = measure_of(s, full_subset(s));
    const double split =
        measure_of(s, make_subset(s, left)) + measure_of(s, make_subset(s, right));
    CHECK(total == split);
    CHECK(total == s.total_measure());
  }
}

TEST_CASE("functions validate length and finiteness") {
  const MeasureSpace s = make_space({1.0, 2.0});
  CHECK(code_of([&] { make_function(s, Eigen::ArrayXcd::Zero(3)); }) == ErrorCode::LengthMismatch);
  Eigen::ArrayXcd bad(2);
  bad << Complex(0.0, 0.0), Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK(code_of([&] { make_function(s, bad); }) == ErrorCode::InvalidInput);
}

TEST_CASE("indicator puts ones on the members") {
  const MeasureSpace s = make_space({1.0, 2.0, 3.0});
  const SimpleFunction chi = indicator(make_subset(s, {0, 2}));
  CHECK(chi.values[0] == Complex(1.0, 0.0));
  CHECK(chi.values[1] == Complex(0.0, 0.0));
  CHECK(chi.values[2] == Complex(1.0, 0.0));
}
