#include "internal.hpp"

#include <algorithm>
#include <cmath>

#include "regdepth/univariate.hpp"

namespace regdepth::detail {

MedianSet location_median_set(const std::vector<double>& ys, Notion notion) {
  std::vector<double> sorted(ys);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double lower = sorted[(n + 1) / 2 - 1];
  const double upper = sorted[(n + 2) / 2 - 1];
  const double rep = 0.5 * (lower + upper);

  int le = 0, ge = 0;
  for (double y : ys) {
    if (y <= rep) ++le;
    if (y >= rep) ++ge;
  }
  const auto depth = DepthValue::from_count(notion, std::min(le, ge), static_cast<int>(n));

  MedianSet out;
  out.maximizers = {Coefficients{rep}};
  out.max_depth = depth;
  out.average = Coefficients{rep};
  out.average_depth = depth;
  out.unique = (lower == upper);  // otherwise the maximizer set is the interval [lower, upper]
  return out;
}

MedianSet enumerate_two_point_median(
    const Dataset& d, Notion notion,
    const std::function<int(const Coefficients&)>& count) {
  const int n = d.n();
  bool any_distinct = false;
  for (int i = 1; i < n && !any_distinct; ++i) {
    any_distinct = d.carrier1(i) != d.carrier1(0);
  }
  if (!any_distinct) {
    throw DegenerateDesign("two-point enumeration: all carriers coincide");
  }

  int best = -1;
  std::vector<Coefficients> maximizers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = d.carrier1(j) - d.carrier1(i);
      if (dx == 0.0) continue;  // vertical, not representable as y = x^T beta
      const double slope = (d.y(j) - d.y(i)) / dx;
      const Coefficients cand{d.y(i) - slope * d.carrier1(i), slope};
      const int k = count(cand);
      if (k > best) {
        best = k;
        maximizers.clear();
      }
      if (k == best) maximizers.push_back(cand);
    }
  }

  MedianSet out;
  out.maximizers = dedup_coefficients(std::move(maximizers));
  out.max_depth = DepthValue::from_count(notion, best, n);
  out.average = coefficients_average(out.maximizers);
  out.average_depth = DepthValue::from_count(notion, count(out.average), n);
  out.unique = out.maximizers.size() == 1;
  return out;
}

}  // namespace regdepth::detail
