#include "regdepth/fixtures.hpp"

#include <utility>

namespace regdepth {

namespace {

// Hertzsprung-Russell diagram of the star cluster CYG OB1 (Rousseeuw & Leroy
// 1987, ch. 2 table 3): log surface temperature vs log light intensity.
// The four giants (rows 11, 20, 30, 34) are the classic leverage points.
constexpr std::pair<double, double> kStars[47] = {
    {4.37, 5.23}, {4.56, 5.74}, {4.26, 4.93}, {4.56, 5.74}, {4.30, 5.19},
    {4.46, 5.46}, {3.84, 4.65}, {4.57, 5.27}, {4.26, 5.57}, {4.37, 5.12},
    {3.49, 5.73}, {4.43, 5.45}, {4.48, 5.42}, {4.01, 4.05}, {4.29, 4.26},
    {4.42, 4.58}, {4.23, 3.94}, {4.42, 4.18}, {4.23, 4.18}, {3.49, 5.89},
    {4.29, 4.38}, {4.29, 4.22}, {4.42, 4.42}, {4.49, 4.85}, {4.38, 5.02},
    {4.42, 4.66}, {4.29, 4.66}, {4.38, 4.90}, {4.22, 4.39}, {3.48, 6.05},
    {4.38, 4.42}, {4.56, 5.10}, {4.45, 5.22}, {3.49, 6.29}, {4.23, 4.34},
    {4.62, 5.62}, {4.53, 5.10}, {4.45, 5.22}, {4.53, 5.18}, {4.43, 5.57},
    {4.38, 4.62}, {4.45, 5.06}, {4.50, 5.34}, {4.45, 5.34}, {4.55, 5.54},
    {4.45, 4.98}, {4.42, 4.50},
};

// 30 points closed under (x,y) -> (-x,-y) and (x,y) -> (x,-y), so the
// depth surface is centered at the origin: seven orbits of four plus one
// axis pair.
constexpr std::pair<double, double> kSymmBase[8] = {
    {0.3, 0.4}, {0.7, 1.1}, {1.2, 0.5}, {1.6, 1.9},
    {2.1, 0.9}, {0.9, 2.3}, {1.4, 1.2}, {0.0, 1.5},
};

Dataset stars() {
  std::vector<double> xs, ys;
  xs.reserve(47);
  ys.reserve(47);
  for (const auto& [x, y] : kStars) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return Dataset::simple(std::move(xs), std::move(ys));
}

Dataset abc() {
  return Dataset::simple({-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0});
}

Dataset symm30() {
  std::vector<double> xs, ys;
  for (const auto& [x, y] : kSymmBase) {
    if (x == 0.0) {
      xs.insert(xs.end(), {0.0, 0.0});
      ys.insert(ys.end(), {y, -y});
    } else {
      xs.insert(xs.end(), {x, x, -x, -x});
      ys.insert(ys.end(), {y, -y, y, -y});
    }
  }
  return Dataset::simple(std::move(xs), std::move(ys));
}

}  // namespace

Dataset make_two_lines(int m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("make_two_lines: m must be a positive even number");
  }
  std::vector<double> xs, ys;
  xs.reserve(static_cast<std::size_t>(2) * m);
  ys.reserve(static_cast<std::size_t>(2) * m);
  for (int c = 1; c <= m / 2; ++c) {
    for (double x : {static_cast<double>(c), static_cast<double>(-c)}) {
      xs.push_back(x);
      ys.push_back(x);  // on y = x
      xs.push_back(x);
      ys.push_back(-x);  // on y = -x
    }
  }
  return Dataset::simple(std::move(xs), std::move(ys));
}

Dataset load_fixture(const std::string& name) {
  if (name == "stars") return stars();
  if (name == "abc") return abc();
  if (name == "two_lines") return make_two_lines(10);
  if (name == "symm30") return symm30();
  throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"stars", "abc", "two_lines", "symm30"};
}

}  // namespace regdepth
