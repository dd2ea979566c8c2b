#include "regdepth/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace regdepth {

double median(std::span<const double> vals) {
  if (vals.empty()) throw std::invalid_argument("median: empty sample");
  std::vector<double> v(vals.begin(), vals.end());
  const std::size_t n = v.size();
  // 0-based index of x_(floor((n+2)/2)).
  const std::size_t hi = (n + 2) / 2 - 1;
  std::nth_element(v.begin(), v.begin() + hi, v.end());
  const double upper = v[hi];
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + hi);
  return 0.5 * (lower + upper);
}

double mad(std::span<const double> vals) {
  const double center = median(vals);
  std::vector<double> dev(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) dev[i] = std::abs(vals[i] - center);
  return median(dev);
}

double quantile(std::span<const double> vals, double q) {
  if (vals.empty()) throw std::invalid_argument("quantile: empty sample");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("quantile: q must be in (0, 1)");
  const std::size_t n = vals.size();
  // Smallest k (1-based) with k/n >= q; the margin absorbs float noise when
  // q * n is meant to be an integer.
  auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-12));
  k = std::clamp<std::size_t>(k, 1, n);
  std::vector<double> v(vals.begin(), vals.end());
  std::nth_element(v.begin(), v.begin() + (k - 1), v.end());
  return v[k - 1];
}

double mean(std::span<const double> vals) {
  if (vals.empty()) throw std::invalid_argument("mean: empty sample");
  const double sum = std::accumulate(vals.begin(), vals.end(), 0.0);
  return sum / static_cast<double>(vals.size());
}

LocationEstimator LocationEstimator::make_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("LocationEstimator: quantile level must be in (0, 1)");
  }
  return {Kind::Quantile, q};
}

double LocationEstimator::operator()(std::span<const double> vals) const {
  switch (kind) {
    case Kind::Median:
      return median(vals);
    case Kind::Mean:
      return mean(vals);
    case Kind::Quantile:
      return quantile(vals, q);
  }
  throw std::logic_error("LocationEstimator: unknown kind");
}

}  // namespace regdepth
