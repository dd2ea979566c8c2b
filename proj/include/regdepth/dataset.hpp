#pragma once

#include <span>

#include "regdepth/types.hpp"

namespace regdepth {

// n observations (x_i, y_i) under the linear model y = x^T beta + e with
// implicit intercept: the design row is x_i = (1, x_{i1}, ..., x_{i(p-1)})
// and the leading 1 is never stored.  p = 1 is the pure location case with
// an empty carrier matrix.  Immutable after construction.
class Dataset {
 public:
  // carriers is row-major n x (p-1); empty when p = 1.
  Dataset(std::vector<double> carriers, std::vector<double> ys, int p);

  static Dataset location(std::vector<double> ys);  // p = 1
  static Dataset simple(std::vector<double> xs, std::vector<double> ys);  // p = 2

  int n() const { return static_cast<int>(ys_.size()); }
  int p() const { return p_; }

  double y(int i) const { return ys_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& ys() const { return ys_; }

  // Carrier j of observation i, j in [0, p-2].
  double carrier(int i, int j) const {
    return carriers_[static_cast<std::size_t>(i) * (p_ - 1) + j];
  }
  // The single carrier, p = 2 shorthand.
  double carrier1(int i) const { return carriers_[static_cast<std::size_t>(i)]; }

  // x_i^T w for w in R^p: w[0] + sum_j carrier(i, j) * w[j + 1].
  double design_dot(int i, std::span<const double> w) const;

  // max_i ||x_i|| over full design rows (>= 1 because of the intercept).
  double max_design_norm() const;

  double max_abs_y() const;

 private:
  std::vector<double> carriers_;
  std::vector<double> ys_;
  int p_;
};

// r_i = y_i - x_i^T b, in dataset order.
std::vector<double> residuals(const Dataset& d, const Coefficients& b);

struct A0Report {
  bool holds = false;
  std::optional<Direction> witness;  // v with x_i^T v ~ 0 for all i, when found
};

// Sample analogue of (A0): fails iff some direction annihilates every design
// row, i.e. the n x p design matrix is rank deficient (singular values below
// 1e-10 times the largest are treated as zero).
A0Report check_a0(const Dataset& d);

// y_i <- y_i + x_i^T b.
Dataset regression_shift(const Dataset& d, const Coefficients& b);

// y_i <- s * y_i, s != 0.
Dataset response_scale(const Dataset& d, double s);

// x_i <- A^T x_i for nonsingular row-major p x p A whose first column is
// (1, 0, ..., 0), so that (1, x) maps to (1, x').
Dataset carrier_affine(const Dataset& d, std::span<const double> a);

}  // namespace regdepth
