#pragma once

#include "regdepth/dataset.hpp"
#include "regdepth/types.hpp"
#include "regdepth/univariate.hpp"

namespace regdepth {

struct UnfitnessResult {
  double uf = 0.0;
  Direction worst_direction;  // argmax v
  double scale = 0.0;         // S(F_y) = mad(ys), fixed per dataset
};

struct PrdOptions {
  // Auto runs the exact breakpoint enumeration for n <= 200 and falls back
  // to the angle grid beyond that.  The grid alone can miss narrow ratio
  // spikes near directions orthogonal to clustered design rows, which the
  // certificate then flags.
  enum class DirectionSearch { Auto, Grid, Exact };

  int grid_angles = 1024;        // stage-1 uniform angle grid
  int certificate_angles = 4096; // verification grid at the reported median
  double angle_tol = 1e-10;      // golden-section bracket width
  double beta_tol = 1e-8;        // simplex diameter convergence
  long max_evals = 100000;       // UF evaluation budget across all starts
  DirectionSearch search = DirectionSearch::Auto;
};

struct PrdMedianResult {
  Coefficients beta;
  double prd = 0.0;  // 1 / (1 + uf)
  double uf = 0.0;
  std::vector<std::pair<Coefficients, double>> optimizer_trace;  // (beta, uf)
  double certificate = 0.0;  // max UF over the verification grid at beta
};

// Directional unfitness |T({(y_i - x_i^T b) / (x_i^T v)})| / mad(ys), the
// T-location of the projected residual ratios over the points with
// |x_i^T v| > 1e-12 * max||x_i||.  Throws DirectionDegenerate when every
// point is excluded and ZeroScale when mad(ys) = 0.
double uf_v(const Dataset& d, const Coefficients& b, const Direction& v,
            const LocationEstimator& t = LocationEstimator::make_median());

// sup over unit directions of uf_v.  p = 2 searches angles on a uniform
// grid followed by golden-section refinement in the best cell and its two
// neighbors (or enumerates ratio breakpoints when opts.exact_directions);
// a half turn suffices for odd T, a full turn otherwise.  p = 1 takes the
// larger of v = +1 and v = -1.
UnfitnessResult uf(const Dataset& d, const Coefficients& b,
                   const LocationEstimator& t = LocationEstimator::make_median(),
                   const PrdOptions& opts = {});

// Projection regression depth 1 / (1 + UF), in (0, 1].
double prd(const Dataset& d, const Coefficients& b,
           const LocationEstimator& t = LocationEstimator::make_median(),
           const PrdOptions& opts = {});

// The unique PRD median: minimizes UF over beta by Nelder-Mead direct search
// from multiple starts (least squares, each RD maximizer when available, and
// the median-slope/median-intercept heuristic), then certifies the reported
// unfitness on a denser direction grid.  UF is quasi-convex in beta, so
// local search suffices; the multi-start guards numerically flat regions.
// p = 1 reduces to the sample median of the responses.  Throws
// OptimizerFailed (with the trace attached) if no start converges within
// opts.max_evals evaluations.
PrdMedianResult prd_median(const Dataset& d,
                           const LocationEstimator& t = LocationEstimator::make_median(),
                           const PrdOptions& opts = {});

}  // namespace regdepth
