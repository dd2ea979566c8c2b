#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regdepth {

enum class Notion { RD, PRD, DC };

std::string to_string(Notion notion);

// Candidate fit beta = (intercept, slope_1, ..., slope_{p-1}).  Identifies the
// hyperplane y = x^T beta, where the design row is x = (1, x_1, ..., x_{p-1}).
struct Coefficients {
  std::vector<double> beta;

  Coefficients() = default;
  Coefficients(std::initializer_list<double> values) : beta(values) {}
  explicit Coefficients(std::vector<double> values) : beta(std::move(values)) {}

  int size() const { return static_cast<int>(beta.size()); }
  double intercept() const { return beta.at(0); }
  double operator[](int i) const { return beta[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return beta[static_cast<std::size_t>(i)]; }
};

// Compare within tol relative to the largest coefficient magnitude (floored
// at 1).  Two-point enumeration can produce the same line from different
// pairs; this is the dedup rule for maximizer sets.
bool coefficients_equal(const Coefficients& a, const Coefficients& b,
                        double tol = 1e-9);

// Depth score.  RD and DC are exact counts k/n; PRD is a real in (0, 1].
struct DepthValue {
  Notion notion = Notion::RD;
  double value = 0.0;
  int numerator = -1;   // k, valid when exact()
  int denominator = 0;  // n, valid when exact()

  bool exact() const { return denominator > 0; }

  static DepthValue from_count(Notion notion, int k, int n);
  static DepthValue from_value(Notion notion, double value);
};

// Unit vector v in S^{p-1}.  Antipodal representatives are interchangeable
// whenever the location functional is odd in sign.
struct Direction {
  std::vector<double> v;

  static Direction from_angle(double theta);  // p = 2, v = (cos, sin)
  static Direction location(double sign);     // p = 1, v = +1 or -1

  double angle() const;  // p = 2 only; representative in [0, pi)
  int size() const { return static_cast<int>(v.size()); }
};

// All maximizers of a count-based depth together with the uniqueness
// diagnostic: the coordinatewise average of the maximizers and its depth.
struct MedianSet {
  std::vector<Coefficients> maximizers;  // sorted by (intercept, slope, ...)
  DepthValue max_depth;
  Coefficients average;
  DepthValue average_depth;
  bool unique = false;

  // The tabulation representative: the maximizer with the largest intercept
  // (ties broken by later coordinates).
  const Coefficients& representative() const;
};

// Sort lexicographically and merge coefficient vectors equal under
// coefficients_equal.  Input order does not matter; output is deterministic.
std::vector<Coefficients> dedup_coefficients(std::vector<Coefficients> cs,
                                             double tol = 1e-9);

Coefficients coefficients_average(const std::vector<Coefficients>& cs);

// Domain failures; the CLI maps these to exit code 3.
struct DepthDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedDimension : DepthDomainError {
  using DepthDomainError::DepthDomainError;
};
struct DegenerateDesign : DepthDomainError {
  using DepthDomainError::DepthDomainError;
};
struct DirectionDegenerate : DepthDomainError {
  using DepthDomainError::DepthDomainError;
};
struct ZeroScale : DepthDomainError {
  using DepthDomainError::DepthDomainError;
};
struct ZeroVariance : DepthDomainError {
  using DepthDomainError::DepthDomainError;
};

// Optimizer failure; carries the iterate trace.  CLI exit code 4.
struct OptimizerFailed : std::runtime_error {
  OptimizerFailed(const std::string& msg,
                  std::vector<std::pair<Coefficients, double>> iterates)
      : std::runtime_error(msg), trace(std::move(iterates)) {}

  std::vector<std::pair<Coefficients, double>> trace;
};

}  // namespace regdepth
