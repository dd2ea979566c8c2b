#include "regdepth/dataset.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace regdepth {

namespace {

void require_finite(const std::vector<double>& vals, const char* what) {
  for (double v : vals) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string("Dataset: non-finite ") + what);
    }
  }
}

Eigen::MatrixXd design_matrix(const Dataset& d) {
  Eigen::MatrixXd x(d.n(), d.p());
  for (int i = 0; i < d.n(); ++i) {
    x(i, 0) = 1.0;
    for (int j = 0; j + 1 < d.p(); ++j) x(i, j + 1) = d.carrier(i, j);
  }
  return x;
}

}  // namespace

Dataset::Dataset(std::vector<double> carriers, std::vector<double> ys, int p)
    : carriers_(std::move(carriers)), ys_(std::move(ys)), p_(p) {
  if (p_ < 1) throw std::invalid_argument("Dataset: p must be >= 1");
  if (ys_.empty()) throw std::invalid_argument("Dataset: needs at least one observation");
  const std::size_t expected = ys_.size() * static_cast<std::size_t>(p_ - 1);
  if (carriers_.size() != expected) {
    throw std::invalid_argument("Dataset: carrier matrix is not n x (p-1)");
  }
  require_finite(ys_, "response");
  require_finite(carriers_, "carrier");
}

Dataset Dataset::location(std::vector<double> ys) {
  return Dataset({}, std::move(ys), 1);
}

Dataset Dataset::simple(std::vector<double> xs, std::vector<double> ys) {
  return Dataset(std::move(xs), std::move(ys), 2);
}

double Dataset::design_dot(int i, std::span<const double> w) const {
  double acc = w[0];
  for (int j = 0; j + 1 < p_; ++j) acc += carrier(i, j) * w[j + 1];
  return acc;
}

double Dataset::max_design_norm() const {
  double best = 1.0;
  for (int i = 0; i < n(); ++i) {
    double sq = 1.0;
    for (int j = 0; j + 1 < p_; ++j) sq += carrier(i, j) * carrier(i, j);
    best = std::max(best, std::sqrt(sq));
  }
  return best;
}

double Dataset::max_abs_y() const {
  double m = 0.0;
  for (double v : ys_) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> residuals(const Dataset& d, const Coefficients& b) {
  if (b.size() != d.p()) {
    throw std::invalid_argument("residuals: coefficient length does not match p");
  }
  std::vector<double> r(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) r[i] = d.y(i) - d.design_dot(i, b.beta);
  return r;
}

A0Report check_a0(const Dataset& d) {
  // p = 1: the design row is the constant 1, never annihilated.
  if (d.p() == 1) return {true, std::nullopt};

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design_matrix(d), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = 1e-10 * sv(0);
  int rank = 0;
  for (int j = 0; j < sv.size(); ++j) {
    if (sv(j) > tol) ++rank;
  }
  if (rank == d.p()) return {true, std::nullopt};

  Direction witness;
  const auto v = svd.matrixV().col(d.p() - 1);
  witness.v.assign(v.data(), v.data() + d.p());
  return {false, witness};
}

Dataset regression_shift(const Dataset& d, const Coefficients& b) {
  if (b.size() != d.p()) {
    throw std::invalid_argument("regression_shift: coefficient length does not match p");
  }
  std::vector<double> ys(static_cast<std::size_t>(d.n()));
  std::vector<double> carriers;
  carriers.reserve(static_cast<std::size_t>(d.n()) * (d.p() - 1));
  for (int i = 0; i < d.n(); ++i) {
    ys[i] = d.y(i) + d.design_dot(i, b.beta);
    for (int j = 0; j + 1 < d.p(); ++j) carriers.push_back(d.carrier(i, j));
  }
  return Dataset(std::move(carriers), std::move(ys), d.p());
}

Dataset response_scale(const Dataset& d, double s) {
  if (s == 0.0 || !std::isfinite(s)) {
    throw std::invalid_argument("response_scale: s must be finite and nonzero");
  }
  std::vector<double> ys(static_cast<std::size_t>(d.n()));
  std::vector<double> carriers;
  carriers.reserve(static_cast<std::size_t>(d.n()) * (d.p() - 1));
  for (int i = 0; i < d.n(); ++i) {
    ys[i] = s * d.y(i);
    for (int j = 0; j + 1 < d.p(); ++j) carriers.push_back(d.carrier(i, j));
  }
  return Dataset(std::move(carriers), std::move(ys), d.p());
}

Dataset carrier_affine(const Dataset& d, std::span<const double> a) {
  const int p = d.p();
  if (static_cast<int>(a.size()) != p * p) {
    throw std::invalid_argument("carrier_affine: A must be p x p");
  }
  Eigen::MatrixXd m(p, p);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) m(r, c) = a[static_cast<std::size_t>(r) * p + c];
  }
  // The map must send (1, x) to (1, x'): A's first column is e_1.
  if (std::abs(m(0, 0) - 1.0) > 1e-12) {
    throw std::invalid_argument("carrier_affine: A(0,0) must be 1");
  }
  for (int r = 1; r < p; ++r) {
    if (std::abs(m(r, 0)) > 1e-12) {
      throw std::invalid_argument("carrier_affine: first column of A must be (1, 0, ..., 0)");
    }
  }
  if (std::abs(m.determinant()) < 1e-12) {
    throw std::invalid_argument("carrier_affine: A is singular");
  }

  std::vector<double> carriers;
  carriers.reserve(static_cast<std::size_t>(d.n()) * (p - 1));
  Eigen::VectorXd row(p);
  for (int i = 0; i < d.n(); ++i) {
    row(0) = 1.0;
    for (int j = 0; j + 1 < p; ++j) row(j + 1) = d.carrier(i, j);
    Eigen::VectorXd mapped = m.transpose() * row;
    for (int j = 1; j < p; ++j) carriers.push_back(mapped(j));
  }
  return Dataset(std::move(carriers), std::vector<double>(d.ys()), p);
}

}  // namespace regdepth
