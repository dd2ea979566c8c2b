#include "regdepth/prd.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "regdepth/fit.hpp"
#include "regdepth/rd.hpp"

namespace regdepth {

namespace {

constexpr double kPi = 3.14159265358979323846;

// UF_v evaluations for one (dataset, beta) pair: the residuals and the scale
// are fixed, only the projection direction varies.
class UfEvaluator {
 public:
  UfEvaluator(const Dataset& d, const Coefficients& b, const LocationEstimator& t,
              double scale)
      : d_(d),
        t_(t),
        scale_(scale),
        residual_(residuals(d, b)),
        eps_proj_(1e-12 * d.max_design_norm()) {}

  const Dataset& dataset() const { return d_; }
  const std::vector<double>& residual() const { return residual_; }

  // nullopt when the projection threshold excludes every point.
  std::optional<double> eval(std::span<const double> v) const {
    ratio_.clear();
    for (int i = 0; i < d_.n(); ++i) {
      double den = v[0];
      for (int j = 0; j + 1 < d_.p(); ++j) den += d_.carrier(i, j) * v[j + 1];
      if (std::abs(den) > eps_proj_) ratio_.push_back(residual_[i] / den);
    }
    if (ratio_.empty()) return std::nullopt;
    return std::abs(t_(ratio_)) / scale_;
  }

  std::optional<double> eval_angle(double theta) const {
    const double v[2] = {std::cos(theta), std::sin(theta)};
    return eval(v);
  }

 private:
  const Dataset& d_;
  const LocationEstimator& t_;
  double scale_;
  std::vector<double> residual_;
  double eps_proj_;
  mutable std::vector<double> ratio_;
};

struct AngleBest {
  double theta = 0.0;
  double value = -1.0;
};

void golden_refine(const UfEvaluator& ev, double a, double b, double tol,
                   AngleBest& best) {
  const double invphi = 0.6180339887498949;
  auto probe = [&](double theta) {
    const auto v = ev.eval_angle(theta);
    const double w = v.value_or(-1.0);
    if (w > best.value) best = {theta, w};
    return w;
  };
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = probe(x1);
  double f2 = probe(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = probe(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = probe(x1);
    }
  }
}

// Angles in [0, pi) at which the ratio sample changes structure: a point
// enters/leaves the projection (x_i^T v = 0), two ratios cross, or a single
// ratio's denominator magnitude is stationary.  UF_v is piecewise smooth
// between consecutive such angles.
std::vector<double> breakpoint_angles(const UfEvaluator& ev) {
  const Dataset& d = ev.dataset();
  const auto& r = ev.residual();
  auto norm_half = [](double theta) {
    theta = std::fmod(theta, kPi);
    if (theta < 0.0) theta += kPi;
    return theta;
  };
  std::vector<double> knots;
  knots.reserve(static_cast<std::size_t>(d.n()) * d.n());
  for (int i = 0; i < d.n(); ++i) {
    const double xi = d.carrier1(i);
    knots.push_back(norm_half(std::atan2(-1.0, xi)));
    knots.push_back(norm_half(std::atan(xi)));
    for (int j = i + 1; j < d.n(); ++j) {
      const double xj = d.carrier1(j);
      const double a = r[j] - r[i];
      const double b = r[i] * xj - r[j] * xi;
      if (a == 0.0 && b == 0.0) continue;
      knots.push_back(norm_half(std::atan2(a, b)));
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

// UF_v is piecewise smooth with jumps where a point leaves the projection,
// so its supremum may only be approached one-sidedly; the scan therefore
// probes every breakpoint, its immediate one-sided neighborhoods, and every
// cell midpoint, then polishes the leading cells.
AngleBest exact_scan(const UfEvaluator& ev, double domain, const PrdOptions& opts) {
  std::vector<double> knots = breakpoint_angles(ev);
  if (domain > kPi) {
    const std::size_t half = knots.size();
    for (std::size_t k = 0; k < half; ++k) knots.push_back(knots[k] + kPi);
  }

  constexpr double kOffset = 1e-9;
  std::vector<double> probes;
  probes.reserve(4 * knots.size());
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const double next = (k + 1 < knots.size()) ? knots[k + 1] : knots.front() + domain;
    probes.push_back(knots[k]);
    probes.push_back(knots[k] + kOffset);
    probes.push_back(next - kOffset);
    probes.push_back(0.5 * (knots[k] + next));
  }
  std::sort(probes.begin(), probes.end());

  AngleBest best;
  std::vector<double> values(probes.size(), -1.0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto v = ev.eval_angle(probes[k]);
    if (!v) continue;
    values[k] = *v;
    if (*v > best.value) best = {probes[k], *v};
  }
  if (best.value < 0.0) {
    throw DirectionDegenerate("uf: every direction excludes all points");
  }

  std::vector<std::size_t> order(probes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  const std::size_t leaders = std::min<std::size_t>(8, order.size());
  for (std::size_t k = 0; k < leaders; ++k) {
    const std::size_t i = order[k];
    if (values[i] < 0.0) continue;
    const double lo = (i == 0) ? probes.back() - domain : probes[i - 1];
    const double hi = (i + 1 == probes.size()) ? probes.front() + domain : probes[i + 1];
    golden_refine(ev, lo, hi, opts.angle_tol, best);
  }
  return best;
}

AngleBest search_angles(const UfEvaluator& ev, bool odd, const PrdOptions& opts) {
  const double domain = odd ? kPi : 2.0 * kPi;
  const bool exact =
      opts.search == PrdOptions::DirectionSearch::Exact ||
      (opts.search == PrdOptions::DirectionSearch::Auto && ev.dataset().n() <= 200);
  if (exact) {
    if (ev.dataset().n() > 200) {
      throw std::invalid_argument("uf: exact direction mode is limited to n <= 200");
    }
    return exact_scan(ev, domain, opts);
  }

  AngleBest best;
  for (int k = 0; k < opts.grid_angles; ++k) {
    const double theta = domain * k / opts.grid_angles;
    const auto v = ev.eval_angle(theta);
    if (v && *v > best.value) best = {theta, *v};
  }
  if (best.value < 0.0) {
    throw DirectionDegenerate("uf: every direction excludes all points");
  }
  const double cell = domain / opts.grid_angles;
  golden_refine(ev, best.theta - cell, best.theta + cell, opts.angle_tol, best);
  return best;
}

double dataset_scale(const Dataset& d) {
  const double scale = mad(d.ys());
  if (scale == 0.0) throw ZeroScale("uf: mad(ys) is zero, responses are concentrated");
  return scale;
}

UnfitnessResult uf_location(const UfEvaluator& ev, double scale) {
  const std::vector<double> plus = {1.0};
  const std::vector<double> minus = {-1.0};
  const double up = ev.eval(plus).value();  // |den| = 1, nothing excluded
  const double un = ev.eval(minus).value();
  if (up >= un) return {up, Direction::location(+1.0), scale};
  return {un, Direction::location(-1.0), scale};
}

using Trace = std::vector<std::pair<Coefficients, double>>;

struct NmOutcome {
  Coefficients x;
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Nelder-Mead on a quasi-convex objective; stops when the simplex diameter
// falls below tol or the shared evaluation budget runs out.  The caller
// supplies the per-coordinate initial steps so the whole search commutes
// with the equivariance transforms.
NmOutcome nelder_mead(const std::function<double(const Coefficients&)>& f,
                      const Coefficients& x0, std::span<const double> steps,
                      double tol, long max_evals, long& evals, Trace& trace) {
  const int dim = x0.size();
  std::vector<Coefficients> v(static_cast<std::size_t>(dim) + 1, x0);
  std::vector<double> fv(static_cast<std::size_t>(dim) + 1,
                         std::numeric_limits<double>::infinity());
  for (int k = 1; k <= dim; ++k) v[k][k - 1] += steps[k - 1];

  auto out_of_budget = [&] { return evals >= max_evals; };
  auto feval = [&](const Coefficients& c) {
    ++evals;
    return f(c);
  };
  for (int k = 0; k <= dim && !out_of_budget(); ++k) fv[k] = feval(v[k]);

  auto order = [&] {
    std::vector<int> idx(v.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    std::vector<Coefficients> v2;
    std::vector<double> f2;
    for (int k : idx) {
      v2.push_back(v[k]);
      f2.push_back(fv[k]);
    }
    v = std::move(v2);
    fv = std::move(f2);
  };
  auto diameter = [&] {
    double m = 0.0;
    for (std::size_t k = 1; k < v.size(); ++k) {
      for (int j = 0; j < dim; ++j) m = std::max(m, std::abs(v[k][j] - v[0][j]));
    }
    return m;
  };

  order();
  NmOutcome best{v[0], fv[0], false};
  while (!out_of_budget()) {
    trace.push_back({v[0], fv[0]});
    if (diameter() < tol) {
      best = {v[0], fv[0], true};
      break;
    }
    Coefficients centroid;
    centroid.beta.assign(static_cast<std::size_t>(dim), 0.0);
    for (int k = 0; k < dim; ++k) {
      for (int j = 0; j < dim; ++j) centroid[j] += v[k][j] / dim;
    }
    auto blend = [&](double w) {
      Coefficients c = centroid;
      for (int j = 0; j < dim; ++j) c[j] += w * (centroid[j] - v[dim][j]);
      return c;
    };

    const Coefficients xr = blend(1.0);
    const double fr = feval(xr);
    if (fr < fv[0]) {
      const Coefficients xe = blend(2.0);
      const double fe = feval(xe);
      if (fe < fr) {
        v[dim] = xe;
        fv[dim] = fe;
      } else {
        v[dim] = xr;
        fv[dim] = fr;
      }
    } else if (fr < fv[dim - 1]) {
      v[dim] = xr;
      fv[dim] = fr;
    } else {
      const bool outside = fr < fv[dim];
      const Coefficients xc = blend(outside ? 0.5 : -0.5);
      const double fc = feval(xc);
      if ((outside && fc <= fr) || (!outside && fc < fv[dim])) {
        v[dim] = xc;
        fv[dim] = fc;
      } else {
        for (std::size_t k = 1; k < v.size(); ++k) {
          for (int j = 0; j < dim; ++j) v[k][j] = v[0][j] + 0.5 * (v[k][j] - v[0][j]);
          fv[k] = feval(v[k]);
        }
      }
    }
    order();
    if (fv[0] < best.f) best = {v[0], fv[0], best.converged};
  }
  if (fv[0] < best.f) {
    best.x = v[0];
    best.f = fv[0];
  }
  return best;
}

// Median slope over all point pairs, then median residual as intercept.
std::optional<Coefficients> median_slope_start(const Dataset& d) {
  std::vector<double> slopes;
  for (int i = 0; i < d.n(); ++i) {
    for (int j = i + 1; j < d.n(); ++j) {
      const double dx = d.carrier1(j) - d.carrier1(i);
      if (dx != 0.0) slopes.push_back((d.y(j) - d.y(i)) / dx);
    }
  }
  if (slopes.empty()) return std::nullopt;
  const double slope = median(slopes);
  std::vector<double> res(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) res[i] = d.y(i) - slope * d.carrier1(i);
  return Coefficients{median(res), slope};
}

}  // namespace

double uf_v(const Dataset& d, const Coefficients& b, const Direction& v,
            const LocationEstimator& t) {
  if (v.size() != d.p()) {
    throw std::invalid_argument("uf_v: direction length does not match p");
  }
  double norm_sq = 0.0;
  for (double c : v.v) norm_sq += c * c;
  if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-12) {
    throw std::invalid_argument("uf_v: direction must be a unit vector");
  }
  const double scale = dataset_scale(d);
  const UfEvaluator ev(d, b, t, scale);
  const auto value = ev.eval(v.v);
  if (!value) {
    throw DirectionDegenerate("uf_v: projection threshold excludes every point");
  }
  return *value;
}

UnfitnessResult uf(const Dataset& d, const Coefficients& b,
                   const LocationEstimator& t, const PrdOptions& opts) {
  if (d.p() > 2) {
    throw UnsupportedDimension("uf: direction search is implemented for p <= 2");
  }
  if (b.size() != d.p()) {
    throw std::invalid_argument("uf: coefficient length does not match p");
  }
  const double scale = dataset_scale(d);
  const UfEvaluator ev(d, b, t, scale);
  if (d.p() == 1) return uf_location(ev, scale);

  const AngleBest best = search_angles(ev, t.odd_in_sign(), opts);
  return {best.value, Direction::from_angle(best.theta), scale};
}

double prd(const Dataset& d, const Coefficients& b, const LocationEstimator& t,
           const PrdOptions& opts) {
  return 1.0 / (1.0 + uf(d, b, t, opts).uf);
}

PrdMedianResult prd_median(const Dataset& d, const LocationEstimator& t,
                           const PrdOptions& opts) {
  if (d.p() > 2) {
    throw UnsupportedDimension("prd_median: implemented for p <= 2");
  }
  const double scale = dataset_scale(d);

  if (d.p() == 1) {
    PrdMedianResult res;
    res.beta = Coefficients{median(d.ys())};
    const UnfitnessResult u = uf(d, res.beta, t, opts);
    res.uf = u.uf;
    res.prd = 1.0 / (1.0 + u.uf);
    res.certificate = u.uf;  // {+1, -1} is already the whole direction set
    res.optimizer_trace = {{res.beta, u.uf}};
    return res;
  }

  // Best-effort start collection: any start that cannot be built is skipped.
  std::vector<Coefficients> starts;
  try {
    starts.push_back(ls_fit(d));
  } catch (const std::exception&) {
  }
  try {
    for (const auto& m : rd_median(d).maximizers) starts.push_back(m);
  } catch (const std::exception&) {
  }
  if (auto ms = median_slope_start(d)) starts.push_back(*ms);
  starts = dedup_coefficients(std::move(starts), 1e-6);
  if (starts.empty()) starts.push_back(Coefficients{median(d.ys()), 0.0});

  // Initial simplex steps from the residual and carrier scales: these map
  // exactly under regression shift, response scale, and carrier transforms,
  // so the whole search path does too.
  std::vector<double> carrier_scale(static_cast<std::size_t>(d.p()) - 1);
  for (int j = 0; j + 1 < d.p(); ++j) {
    std::vector<double> col(static_cast<std::size_t>(d.n()));
    for (int i = 0; i < d.n(); ++i) col[i] = d.carrier(i, j);
    carrier_scale[j] = std::max(mad(col), 1e-12);
  }
  auto initial_steps = [&](const Coefficients& x0) {
    double sr = mad(residuals(d, x0));
    if (sr == 0.0) sr = 1e-6 * scale;  // exact-fit start
    std::vector<double> h(static_cast<std::size_t>(d.p()));
    h[0] = 0.5 * sr;
    for (int j = 0; j + 1 < d.p(); ++j) h[j + 1] = 0.5 * sr / carrier_scale[j];
    return h;
  };

  long evals = 0;
  Trace trace;
  auto objective = [&](const Coefficients& b) { return uf(d, b, t, opts).uf; };

  NmOutcome best;
  bool any_converged = false;
  for (const auto& start : starts) {
    const NmOutcome run = nelder_mead(objective, start, initial_steps(start),
                                      opts.beta_tol, opts.max_evals, evals, trace);
    any_converged = any_converged || run.converged;
    if (run.f < best.f) best = run;
    if (evals >= opts.max_evals) break;
  }
  if (!any_converged) {
    throw OptimizerFailed("prd_median: no start converged within the evaluation budget",
                          std::move(trace));
  }

  PrdMedianResult res;
  res.beta = best.x;
  res.optimizer_trace = std::move(trace);

  const UfEvaluator ev(d, res.beta, t, scale);
  const double domain = t.odd_in_sign() ? kPi : 2.0 * kPi;
  double cert = 0.0;
  for (int k = 0; k < opts.certificate_angles; ++k) {
    const auto v = ev.eval_angle(domain * k / opts.certificate_angles);
    if (v) cert = std::max(cert, *v);
  }
  res.certificate = cert;
  // Report the best known supremum at the returned point; the certificate is
  // a lower bound on it, so it can never exceed the reported unfitness.
  res.uf = std::max(best.f, cert);
  res.prd = 1.0 / (1.0 + res.uf);
  return res;
}

}  // namespace regdepth
