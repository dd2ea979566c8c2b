#pragma once

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"

namespace regdepth {

struct RdResult {
  DepthValue depth;                      // exact k/n
  std::optional<double> critical_pivot;  // carrier location attaining the min (p = 2)
};

// Regression depth: the minimum fraction of observations the line must pass
// while tilting to vertical about some pivot.
//
// p = 2: (1/n) min over pivots u of min(L>=(u) + R<=(u), L<=(u) + R>=(u)),
// where L>=(u) = #{i : r_i >= 0, x_i < u} and so on.  Residuals within
// 1e-9 * (1 + max|y|) of zero count on both sign sides (the line touches
// those points, so tilting past vertical in either direction passes them).
// Pivots are the midpoints between consecutive distinct carrier values plus
// one sentinel below the min and one above the max; the counts are piecewise
// constant in u with breakpoints only at carriers, so these exhaust all
// values.
//
// p = 1: (1/n) min(#{y_i <= b}, #{y_i >= b}), the location depth.
//
// Throws UnsupportedDimension for p > 2: the exact tilting count does not
// generalize and an approximation would be untestable here.
RdResult rd_depth(const Dataset& d, const Coefficients& b);

// All deepest fits.  p = 2: evaluates every line through two data points
// with distinct carriers (maximizers of the piecewise-constant count lie on
// such lines; vertical pairs cannot be written as y = x^T beta and are
// skipped), dedups, and reports the coordinatewise average with its own
// depth as the uniqueness diagnostic.  p = 1: the maximizer set is the
// interval of sample medians; returns its conventional midpoint as the
// single representative and flags uniqueness by whether the interval
// degenerates to a point.
MedianSet rd_median(const Dataset& d);

}  // namespace regdepth
