#pragma once

#include <span>

namespace regdepth {

// (x_(floor((n+1)/2)) + x_(floor((n+2)/2))) / 2 on the sorted sample: the
// middle value for odd n, the average of the two middle values for even n.
// Unique by construction.
double median(std::span<const double> vals);

// median(|v_i - median(v)|).  No consistency constant: the value feeds the
// unfitness ratio purely as a scale gauge.
double mad(std::span<const double> vals);

// Smallest sample value z with #{v_i <= z}/n >= q, the left-continuous
// inverse of the empirical CDF.  Always an element of vals.
double quantile(std::span<const double> vals, double q);

double mean(std::span<const double> vals);

// Univariate location functional T plugged into the unfitness ratio sample.
struct LocationEstimator {
  enum class Kind { Median, Mean, Quantile };

  Kind kind = Kind::Median;
  double q = 0.5;  // used when kind == Quantile

  static LocationEstimator make_median() { return {Kind::Median, 0.5}; }
  static LocationEstimator make_mean() { return {Kind::Mean, 0.5}; }
  static LocationEstimator make_quantile(double q);

  double operator()(std::span<const double> vals) const;

  // T(-Z) == -T(Z).  Holds for the median and the mean; a sample quantile is
  // not odd (Q_q flips to Q_{1-q}), so the direction search must cover the
  // full circle rather than a half turn.
  bool odd_in_sign() const { return kind != Kind::Quantile; }
};

}  // namespace regdepth
