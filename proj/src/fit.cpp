#include "regdepth/fit.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace regdepth {

Coefficients ls_fit(const Dataset& d) {
  const int n = d.n();
  const int p = d.p();
  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    x(i, 0) = 1.0;
    for (int j = 0; j + 1 < p; ++j) x(i, j + 1) = d.carrier(i, j);
    y(i) = d.y(i);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < p) {
    throw DegenerateDesign("ls_fit: design matrix is rank deficient");
  }
  const Eigen::VectorXd beta = qr.solve(y);
  Coefficients out;
  out.beta.assign(beta.data(), beta.data() + p);
  return out;
}

double r_squared(const Dataset& d, const Coefficients& b) {
  if (d.n() < 2) throw std::invalid_argument("r_squared: needs n >= 2");
  const double ybar = [&] {
    double s = 0.0;
    for (double y : d.ys()) s += y;
    return s / d.n();
  }();
  double sst = 0.0;
  for (double y : d.ys()) sst += (y - ybar) * (y - ybar);
  if (sst == 0.0) throw ZeroVariance("r_squared: responses have zero total variation");

  double ssr = 0.0;
  for (double r : residuals(d, b)) ssr += r * r;
  return 1.0 - ssr / sst;
}

ResidualTable residual_table(const Dataset& d, const std::vector<NamedFit>& fits) {
  ResidualTable table;
  for (const auto& f : fits) {
    if (f.beta.size() != d.p()) {
      throw std::invalid_argument("residual_table: fit '" + f.name +
                                  "' does not match the dataset dimension");
    }
    table.names.push_back(f.name);
  }
  table.rows.reserve(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) {
    ResidualTable::Row row;
    row.id = i + 1;
    for (int j = 0; j + 1 < d.p(); ++j) row.x.push_back(d.carrier(i, j));
    row.y = d.y(i);
    for (const auto& f : fits) {
      const double fitted = d.design_dot(i, f.beta.beta);
      row.fitted.push_back(fitted);
      row.residual.push_back(d.y(i) - fitted);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace regdepth
