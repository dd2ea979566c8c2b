#pragma once

#include <string>

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"

namespace regdepth {

// Least squares baseline via column-pivoted QR.  Throws DegenerateDesign
// when the design matrix is rank deficient (relative tolerance 1e-10).
Coefficients ls_fit(const Dataset& d);

// 1 - sum r_i^2 / sum (y_i - mean(y))^2.  Throws ZeroVariance when the
// responses are constant.
double r_squared(const Dataset& d, const Coefficients& b);

struct NamedFit {
  std::string name;
  Coefficients beta;
};

// Per-observation fitted values and residuals for a set of named fits,
// in dataset order.
struct ResidualTable {
  struct Row {
    int id = 0;  // 1-based observation index
    std::vector<double> x;
    double y = 0.0;
    std::vector<double> fitted;    // one per fit
    std::vector<double> residual;  // y - fitted
  };

  std::vector<std::string> names;
  std::vector<Row> rows;
};

ResidualTable residual_table(const Dataset& d, const std::vector<NamedFit>& fits);

}  // namespace regdepth
