#include "regdepth/dc.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace regdepth {

DepthValue dc_depth(const Dataset& d, const Coefficients& b,
                    std::optional<double> tol_zero) {
  if (d.p() < 2) {
    throw std::invalid_argument("dc_depth: use dc_depth_1d for the location case");
  }
  const double tol = tol_zero.value_or(detail::residual_zero_tol(d));
  if (tol < 0.0) throw std::invalid_argument("dc_depth: tol_zero must be >= 0");

  const auto r = residuals(d, b);
  int k = 0;
  for (double ri : r) {
    if (std::abs(ri) <= tol) ++k;
  }
  return DepthValue::from_count(Notion::DC, k, d.n());
}

DepthValue dc_depth_1d(std::span<const double> ys, double b) {
  if (ys.empty()) throw std::invalid_argument("dc_depth_1d: empty sample");
  int le = 0, ge = 0;
  for (double y : ys) {
    if (y <= b) ++le;
    if (y >= b) ++ge;
  }
  return DepthValue::from_count(Notion::DC, std::min(le, ge),
                                static_cast<int>(ys.size()));
}

MedianSet dc_maximizers(const Dataset& d) {
  if (d.p() > 2) {
    throw UnsupportedDimension("dc_maximizers: enumeration requires p <= 2");
  }
  if (d.n() < d.p()) {
    throw std::invalid_argument("dc_maximizers: needs at least p observations");
  }
  if (d.p() == 1) {
    return detail::location_median_set(d.ys(), Notion::DC);
  }
  return detail::enumerate_two_point_median(d, Notion::DC, [&](const Coefficients& c) {
    return dc_depth(d, c).numerator;
  });
}

}  // namespace regdepth
