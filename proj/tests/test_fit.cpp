#include <doctest.h>

#include <cmath>

#include "regdepth/fit.hpp"
#include "regdepth/fixtures.hpp"
#include "test_support.hpp"

using namespace regdepth;

TEST_SUITE("fit") {

TEST_CASE("ls_fit reproduces the published stars baseline") {
  const auto b = ls_fit(load_fixture("stars"));
  CHECK(approx(b[0], 6.7934673, 1e-6));
  CHECK(approx(b[1], -0.4133039, 1e-6));
}

TEST_CASE("ls_fit interpolates two points and flattens constant responses") {
  const auto b = ls_fit(Dataset::simple({0, 1}, {0, 1}));
  CHECK(approx(b[0], 0.0, 1e-12));
  CHECK(approx(b[1], 1.0, 1e-12));

  const auto flat = ls_fit(Dataset::simple({1, 2, 3}, {4, 4, 4}));
  CHECK(approx(flat[0], 4.0, 1e-12));
  CHECK(approx(flat[1], 0.0, 1e-12));

  CHECK_THROWS_AS(ls_fit(Dataset::simple({2, 2, 2}, {1, 2, 3})), DegenerateDesign);
}

TEST_CASE("r_squared") {
  const auto d = load_fixture("stars");
  CHECK(approx(r_squared(d, ls_fit(d)), 0.044, 1e-3));

  const auto exact = Dataset::simple({0, 1, 2}, {1, 3, 5});
  CHECK(approx(r_squared(exact, {1, 2}), 1.0, 1e-15));

  const double ybar = (1.0 + 3.0 + 5.0) / 3.0;
  CHECK(approx(r_squared(exact, {ybar, 0}), 0.0, 1e-15));

  CHECK_THROWS_AS(r_squared(Dataset::simple({1}, {1}), Coefficients{0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(r_squared(Dataset::simple({1, 2}, {3, 3}), Coefficients{0, 0}),
                  ZeroVariance);
}

TEST_CASE("LS residuals are orthogonal to the design columns") {
  TestRng rng(1313);
  for (int rep = 0; rep < 20; ++rep) {
    const auto d = random_simple_dataset(rng, rng.uniform_int(3, 20));
    const auto r = residuals(d, ls_fit(d));
    double sum = 0.0, xsum = 0.0, ymax = 0.0;
    for (int i = 0; i < d.n(); ++i) {
      sum += r[i];
      xsum += r[i] * d.carrier1(i);
      ymax = std::max(ymax, std::fabs(d.y(i)));
    }
    const double bound = 1e-8 * d.n() * std::max(1.0, ymax);
    CHECK(std::fabs(sum) <= bound);
    CHECK(std::fabs(xsum) <= bound);
  }
}

TEST_CASE("LS maximizes r_squared") {
  TestRng rng(1414);
  for (int rep = 0; rep < 15; ++rep) {
    const auto d = random_simple_dataset(rng, rng.uniform_int(3, 15));
    const double best = r_squared(d, ls_fit(d));
    for (int t = 0; t < 10; ++t) {
      CHECK(r_squared(d, {rng.uniform(-3, 3), rng.uniform(-3, 3)}) <= best + 1e-12);
    }
  }
}

TEST_CASE("residual_table reproduces printed star rows") {
  const auto d = load_fixture("stars");
  const std::vector<NamedFit> fits{
      {"ls", ls_fit(d)},
      {"rd", {-6.065, 2.5}},
      {"prd", {-7.453665, 2.829416}},
  };
  const auto table = residual_table(d, fits);
  REQUIRE(table.rows.size() == 47);
  REQUIRE(table.names.size() == 3);

  const auto& r1 = table.rows[0];
  CHECK(r1.id == 1);
  CHECK(r1.x[0] == 4.37);
  CHECK(r1.y == 5.23);
  CHECK(approx(r1.fitted[0], 4.987329, 1e-6));
  CHECK(approx(r1.fitted[1], 4.860, 1e-3));
  CHECK(approx(r1.fitted[2], 4.910883, 1e-6));
  CHECK(approx(r1.residual[0], 0.2426707, 1e-6));
  CHECK(approx(r1.residual[1], 0.370, 1e-3));
  CHECK(approx(r1.residual[2], 0.3191171, 1e-6));

  const auto& r7 = table.rows[6];
  CHECK(approx(r7.residual[2], 1.2387076, 1e-6));

  const auto& r47 = table.rows[46];
  CHECK(approx(r47.residual[0], -0.46666406, 1e-6));

  // yhat + r recovers y exactly at this data scale
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.fitted.size(); ++c) {
      CHECK(row.fitted[c] + row.residual[c] == row.y);
    }
  }
}

TEST_CASE("residual_table rejects mismatched fits") {
  const auto d = load_fixture("abc");
  CHECK_THROWS_AS(residual_table(d, {{"bad", Coefficients{1, 2, 3}}}),
                  std::invalid_argument);
}

}  // TEST_SUITE
