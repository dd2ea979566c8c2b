#include <doctest.h>

#include "oracle_rd.hpp"
#include "regdepth/fixtures.hpp"
#include "regdepth/rd.hpp"
#include "test_support.hpp"

using namespace regdepth;

TEST_SUITE("rd") {

TEST_CASE("abc counterexample: deepest lines have 2/3, their average only 1/3") {
  const auto d = load_fixture("abc");
  CHECK(rd_depth(d, {0, 0}).depth.numerator == 2);
  CHECK(rd_depth(d, {1, 1}).depth.numerator == 2);
  CHECK(rd_depth(d, {1, -1}).depth.numerator == 2);
  CHECK(rd_depth(d, {2.0 / 3.0, 0}).depth.numerator == 1);
}

TEST_CASE("stars: the published deepest line has depth 21/47") {
  const auto d = load_fixture("stars");
  const auto r = rd_depth(d, {-6.065, 2.5});
  CHECK(r.depth.numerator == 21);
  CHECK(r.depth.denominator == 47);
  CHECK(r.critical_pivot.has_value());
}

TEST_CASE("location depth (p = 1)") {
  const auto d = Dataset::location({1, 2, 3});
  CHECK(rd_depth(d, Coefficients{2}).depth.numerator == 2);
  CHECK(rd_depth(d, Coefficients{0}).depth.numerator == 0);  // no mass below
  CHECK(rd_depth(d, Coefficients{3}).depth.numerator == 1);
}

TEST_CASE("dimension guards") {
  const auto d3 = Dataset({1, 2, 3, 4, 5, 6}, {1, 2, 3}, 3);
  CHECK_THROWS_AS(rd_depth(d3, Coefficients{0, 0, 0}), UnsupportedDimension);
  CHECK_THROWS_AS(rd_median(d3), UnsupportedDimension);
  const auto d = Dataset::simple({1, 2}, {1, 2});
  CHECK_THROWS_AS(rd_depth(d, Coefficients{0}), std::invalid_argument);
}

TEST_CASE("rd_median on abc returns the three two-point lines") {
  const auto m = rd_median(load_fixture("abc"));
  REQUIRE(m.maximizers.size() == 3);
  CHECK(coefficients_equal(m.maximizers[0], {0, 0}));
  CHECK(coefficients_equal(m.maximizers[1], {1, -1}));
  CHECK(coefficients_equal(m.maximizers[2], {1, 1}));
  CHECK(m.max_depth.numerator == 2);
  CHECK_FALSE(m.unique);
  CHECK(approx(m.average[0], 2.0 / 3.0, 1e-12));
  CHECK(m.average[1] == 0.0);
  CHECK(m.average_depth.numerator == 1);
}

TEST_CASE("rd_median on the stars reproduces the three published lines") {
  const auto m = rd_median(load_fixture("stars"));
  REQUIRE(m.maximizers.size() == 3);
  CHECK(m.max_depth.numerator == 21);
  CHECK(approx(m.maximizers[0][0], -8.586500, 1e-6));
  CHECK(approx(m.maximizers[0][1], 3.075000, 1e-6));
  CHECK(approx(m.maximizers[1][0], -7.903043, 1e-6));
  CHECK(approx(m.maximizers[1][1], 2.913043, 1e-6));
  CHECK(approx(m.maximizers[2][0], -6.065000, 1e-6));
  CHECK(approx(m.maximizers[2][1], 2.500000, 1e-6));
  CHECK(approx(m.average[0], -7.518181, 1e-5));
  CHECK(approx(m.average[1], 2.829348, 1e-5));
  CHECK(m.average_depth.numerator == 20);
  CHECK_FALSE(m.unique);
}

TEST_CASE("rd_median location cases") {
  const auto odd = rd_median(Dataset::location({1, 2, 3}));
  CHECK(odd.maximizers.size() == 1);
  CHECK(odd.maximizers[0][0] == 2);
  CHECK(odd.max_depth.numerator == 2);  // min(#{y<=2}, #{y>=2}) = 2 of 3
  CHECK(odd.unique);

  const auto even = rd_median(Dataset::location({1, 2, 3, 4}));
  CHECK(even.maximizers[0][0] == 2.5);
  CHECK(even.max_depth.numerator == 2);
  CHECK_FALSE(even.unique);  // every point of [2, 3] maximizes
}

TEST_CASE("degenerate designs are refused") {
  CHECK_THROWS_AS(rd_median(Dataset::simple({2, 2, 2}, {1, 2, 3})), DegenerateDesign);
  CHECK_THROWS_AS(rd_median(Dataset::simple({1}, {1})), std::invalid_argument);
}

TEST_CASE("depth is invariant under regression shift and response scale") {
  TestRng rng(303);
  for (int rep = 0; rep < 60; ++rep) {
    const auto d = random_simple_dataset(rng, rng.uniform_int(3, 12));
    const Coefficients beta{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const int k = rd_depth(d, beta).depth.numerator;

    const Coefficients w{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const auto shifted = regression_shift(d, w);
    CHECK(rd_depth(shifted, {beta[0] + w[0], beta[1] + w[1]}).depth.numerator == k);

    const double s = rng.uniform(0.2, 2.0) * (rng.uniform_int(0, 1) ? 1.0 : -1.0);
    const auto scaled = response_scale(d, s);
    CHECK(rd_depth(scaled, {s * beta[0], s * beta[1]}).depth.numerator == k);
  }
}

TEST_CASE("the enumerated median dominates arbitrary candidates") {
  TestRng rng(404);
  for (int rep = 0; rep < 25; ++rep) {
    const auto d = random_simple_dataset(rng, rng.uniform_int(4, 10));
    const int best = rd_median(d).max_depth.numerator;
    for (int t = 0; t < 20; ++t) {
      const Coefficients beta{rng.uniform(-4, 4), rng.uniform(-4, 4)};
      CHECK(rd_depth(d, beta).depth.numerator <= best);
    }
  }
}

TEST_CASE("tilting simulation oracle agrees on random data and two-point lines") {
  TestRng rng(505);
  for (int rep = 0; rep < 80; ++rep) {
    const int n = rng.uniform_int(2, 8);
    const auto d = random_simple_dataset(rng, n);
    for (int t = 0; t < 6; ++t) {
      const Coefficients beta{rng.uniform(-3, 3), rng.uniform(-3, 3)};
      CHECK(rd_depth(d, beta).depth.numerator == rd_tilting_oracle(d, beta));
    }
    const int i = rng.uniform_int(0, n - 1);
    const int j = rng.uniform_int(0, n - 1);
    if (i != j && d.carrier1(i) != d.carrier1(j)) {
      const double slope = (d.y(j) - d.y(i)) / (d.carrier1(j) - d.carrier1(i));
      const Coefficients beta{d.y(i) - slope * d.carrier1(i), slope};
      CHECK(rd_depth(d, beta).depth.numerator == rd_tilting_oracle(d, beta));
    }
  }
}

}  // TEST_SUITE
