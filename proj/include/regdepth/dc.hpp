#pragma once

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"

namespace regdepth {

// Carrizosa depth for p >= 2: the fraction of observations lying exactly on
// the hyperplane y = x^T b.  "Exactly" means |r_i| <= tol_zero; the default
// tolerance 1e-9 * (1 + max|y|) scales with the data so that constructed
// fixtures count while generic residuals do not.
DepthValue dc_depth(const Dataset& d, const Coefficients& b,
                    std::optional<double> tol_zero = std::nullopt);

// Univariate reduction: (1/n) min(#{y_i <= b}, #{y_i >= b}).
DepthValue dc_depth_1d(std::span<const double> ys, double b);

// All maximizers of dc_depth over lines through two data points (a maximal
// exact-fit count is always attained by a hyperplane through p sample
// points), with the average-depth uniqueness diagnostic.  p = 1 reduces to
// the interval of univariate maximizers, represented by its conventional
// midpoint.
MedianSet dc_maximizers(const Dataset& d);

}  // namespace regdepth
