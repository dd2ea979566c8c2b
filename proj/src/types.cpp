#include "regdepth/types.hpp"

#include <algorithm>
#include <cmath>

namespace regdepth {

std::string to_string(Notion notion) {
  switch (notion) {
    case Notion::RD:
      return "rd";
    case Notion::PRD:
      return "prd";
    case Notion::DC:
      return "dc";
  }
  return "?";
}

namespace {

double max_abs(const Coefficients& c) {
  double m = 0.0;
  for (double x : c.beta) m = std::max(m, std::abs(x));
  return m;
}

bool lex_less(const Coefficients& a, const Coefficients& b) {
  return std::lexicographical_compare(a.beta.begin(), a.beta.end(),
                                      b.beta.begin(), b.beta.end());
}

}  // namespace

bool coefficients_equal(const Coefficients& a, const Coefficients& b, double tol) {
  if (a.size() != b.size()) return false;
  const double scale = std::max({1.0, max_abs(a), max_abs(b)});
  for (int j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > tol * scale) return false;
  }
  return true;
}

DepthValue DepthValue::from_count(Notion notion, int k, int n) {
  if (n <= 0 || k < 0 || k > n) {
    throw std::invalid_argument("DepthValue: count out of range");
  }
  DepthValue d;
  d.notion = notion;
  d.numerator = k;
  d.denominator = n;
  d.value = static_cast<double>(k) / static_cast<double>(n);
  return d;
}

DepthValue DepthValue::from_value(Notion notion, double value) {
  DepthValue d;
  d.notion = notion;
  d.value = value;
  return d;
}

Direction Direction::from_angle(double theta) {
  return Direction{{std::cos(theta), std::sin(theta)}};
}

Direction Direction::location(double sign) {
  return Direction{{sign < 0.0 ? -1.0 : 1.0}};
}

double Direction::angle() const {
  if (v.size() != 2) {
    throw std::invalid_argument("Direction::angle: defined for p = 2 only");
  }
  const double pi = 3.14159265358979323846;
  double theta = std::atan2(v[1], v[0]);
  if (theta < 0.0) theta += pi;
  if (theta >= pi) theta -= pi;
  return theta;
}

const Coefficients& MedianSet::representative() const {
  if (maximizers.empty()) {
    throw std::logic_error("MedianSet::representative: no maximizers");
  }
  const Coefficients* best = &maximizers.front();
  for (const auto& c : maximizers) {
    if (lex_less(*best, c)) best = &c;
  }
  return *best;
}

std::vector<Coefficients> dedup_coefficients(std::vector<Coefficients> cs, double tol) {
  std::sort(cs.begin(), cs.end(), lex_less);
  std::vector<Coefficients> out;
  for (auto& c : cs) {
    if (out.empty() || !coefficients_equal(out.back(), c, tol)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

Coefficients coefficients_average(const std::vector<Coefficients>& cs) {
  if (cs.empty()) throw std::invalid_argument("coefficients_average: empty set");
  Coefficients avg;
  avg.beta.assign(cs.front().beta.size(), 0.0);
  for (const auto& c : cs) {
    if (c.size() != avg.size()) {
      throw std::invalid_argument("coefficients_average: mixed dimensions");
    }
    for (int j = 0; j < avg.size(); ++j) avg[j] += c[j];
  }
  for (int j = 0; j < avg.size(); ++j) avg[j] /= static_cast<double>(cs.size());
  return avg;
}

}  // namespace regdepth
