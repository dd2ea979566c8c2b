#include "regdepth/rd.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace regdepth {

namespace {

struct SignedPoint {
  double x;
  bool ge;  // r >= 0, zero residuals on both sides
  bool le;  // r <= 0
};

}  // namespace

RdResult rd_depth(const Dataset& d, const Coefficients& b) {
  if (d.p() > 2) {
    throw UnsupportedDimension("rd_depth: exact regression depth requires p <= 2");
  }
  if (b.size() != d.p()) {
    throw std::invalid_argument("rd_depth: coefficient length does not match p");
  }
  const int n = d.n();

  if (d.p() == 1) {
    int le = 0, ge = 0;
    for (double y : d.ys()) {
      if (y <= b[0]) ++le;
      if (y >= b[0]) ++ge;
    }
    return {DepthValue::from_count(Notion::RD, std::min(le, ge), n), std::nullopt};
  }

  const auto r = residuals(d, b);
  const double eps = detail::residual_zero_tol(d);
  std::vector<SignedPoint> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pts[i] = {d.carrier1(i), r[i] >= -eps, r[i] <= eps};
  }
  std::sort(pts.begin(), pts.end(),
            [](const SignedPoint& a, const SignedPoint& b) { return a.x < b.x; });

  int ge_left = 0, le_left = 0, ge_right = 0, le_right = 0;
  for (const auto& p : pts) {
    ge_right += p.ge;
    le_right += p.le;
  }

  // Sweep pivots left to right: the sentinel below the smallest carrier, the
  // midpoint after each distinct carrier group, and the sentinel above the
  // largest.  Tilting down about u passes the r >= 0 mass on the left and
  // the r <= 0 mass on the right; tilting up passes the complement.
  double best_pivot = pts.front().x - 1.0;
  int best = std::min(ge_left + le_right, le_left + ge_right);

  std::size_t i = 0;
  while (i < pts.size()) {
    const double cx = pts[i].x;
    while (i < pts.size() && pts[i].x == cx) {
      ge_left += pts[i].ge;
      le_left += pts[i].le;
      ge_right -= pts[i].ge;
      le_right -= pts[i].le;
      ++i;
    }
    const double pivot = (i < pts.size()) ? 0.5 * (cx + pts[i].x) : cx + 1.0;
    const int c = std::min(ge_left + le_right, le_left + ge_right);
    if (c < best) {
      best = c;
      best_pivot = pivot;
    }
  }
  return {DepthValue::from_count(Notion::RD, best, n), best_pivot};
}

MedianSet rd_median(const Dataset& d) {
  if (d.p() > 2) {
    throw UnsupportedDimension("rd_median: exact regression depth requires p <= 2");
  }
  if (d.n() < d.p()) {
    throw std::invalid_argument("rd_median: needs at least p observations");
  }
  if (d.p() == 1) {
    return detail::location_median_set(d.ys(), Notion::RD);
  }
  return detail::enumerate_two_point_median(d, Notion::RD, [&](const Coefficients& c) {
    return rd_depth(d, c).depth.numerator;
  });
}

}  // namespace regdepth
