#pragma once

#include <functional>

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"

// Shared internals of the count-based depth notions.  Not installed.
namespace regdepth::detail {

// Residuals within this tolerance of zero are treated as lying on the fit.
inline double residual_zero_tol(const Dataset& d) {
  return 1e-9 * (1.0 + d.max_abs_y());
}

// The conventional univariate median set: the maximizer interval of
// min(#{y <= b}, #{y >= b}) collapsed to its midpoint representative.
MedianSet location_median_set(const std::vector<double>& ys, Notion notion);

// Evaluate `count` (an exact depth numerator) on every line through two data
// points with distinct carriers, and assemble the maximizer set.  Requires
// p = 2; throws DegenerateDesign when all carriers coincide.
MedianSet enumerate_two_point_median(
    const Dataset& d, Notion notion,
    const std::function<int(const Coefficients&)>& count);

}  // namespace regdepth::detail
