#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "regdepth/dataset.hpp"

// Deterministic generators for the property suites.  mt19937 output is
// pinned by the standard; the scaling below avoids the library-defined
// distribution implementations so sequences are identical everywhere.
struct TestRng {
  std::mt19937 gen;

  explicit TestRng(std::uint32_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen()) / 4294967296.0);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
  }

  // Irwin-Hall approximation of a standard normal; plenty for test data.
  double gauss() {
    double s = 0.0;
    for (int i = 0; i < 12; ++i) s += uniform(0.0, 1.0);
    return s - 6.0;
  }

  std::vector<double> vector(int n, double lo, double hi) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }
};

inline regdepth::Dataset random_simple_dataset(TestRng& rng, int n,
                                               double xspread = 2.0,
                                               double yspread = 3.0) {
  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = rng.uniform(-xspread, xspread);
    ys[i] = rng.uniform(-yspread, yspread);
  }
  return regdepth::Dataset::simple(std::move(xs), std::move(ys));
}

inline bool approx(double a, double b, double eps = 1e-9) {
  return std::fabs(a - b) <= eps;
}
