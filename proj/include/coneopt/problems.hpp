#ifndef CONEOPT_PROBLEMS_HPP
#define CONEOPT_PROBLEMS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "coneopt/core.hpp"

namespace coneopt {

/// Bi-objective benchmark: evaluation map, bounds, and an analytic sampler of
/// the true Pareto front.
struct Problem {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 2;
  Bounds bounds;
  std::function<ObjectiveVector(const DecisionVector&)> evaluate;
  std::function<std::vector<ObjectiveVector>(std::size_t)> sample_front;
};

inline ObjectiveVector evaluate_dtlz2(const DecisionVector& x) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  for (double xi : x)
    if (xi < 0.0 || xi > 1.0)
      throw std::invalid_argument("dtlz2: coordinate outside [0,1]");
  double g = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double d = x[i] - 0.5;
    g += d * d;
  }
  return {(1.0 + g) * std::cos(x[0] * half_pi), (1.0 + g) * std::sin(x[0] * half_pi)};
}

// WFG transformation toolkit pieces, bi-objective instantiation with k
// position parameters (default 1) and l = n - k distance parameters.
namespace wfg {

inline double b_param(double y, double u, double A, double B, double C) {
  const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
  return std::pow(y, B + (C - B) * v);
}

inline double s_decept(double y, double A, double B, double C) {
  const double tmp1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
  const double tmp2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
  return 1.0 + (std::fabs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B);
}

inline double s_multi(double y, double A, double B, double C) {
  const double tmp1 = std::fabs(y - C) / (2.0 * (std::floor(C - y) + C));
  const double tmp2 = (4.0 * A + 2.0) * std::numbers::pi * (0.5 - tmp1);
  return (1.0 + std::cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0);
}

inline double r_sum(const std::vector<double>& y, std::size_t first, std::size_t last) {
  double num = 0.0;
  for (std::size_t i = first; i < last; ++i) num += y[i];
  return num / static_cast<double>(last - first);
}

inline double r_nonsep(const std::vector<double>& y, std::size_t first, std::size_t last,
                       std::size_t A) {
  const std::size_t len = last - first;
  double num = 0.0;
  for (std::size_t j = 0; j < len; ++j) {
    num += y[first + j];
    for (std::size_t k = 0; k + 2 <= A; ++k)
      num += std::fabs(y[first + j] - y[first + (j + k + 1) % len]);
  }
  const double ceilA2 = std::ceil(A / 2.0);
  const double denom =
      (static_cast<double>(len) / A) * ceilA2 * (1.0 + 2.0 * A - 2.0 * ceilA2);
  return num / denom;
}

inline void check_bounds(const DecisionVector& z) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] < 0.0 || z[i] > 2.0 * (i + 1))
      throw std::invalid_argument("wfg: coordinate outside [0, 2i]");
}

inline ObjectiveVector concave_shape(double t1, double tm) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double x1 = std::max(tm, 1.0) * (t1 - 0.5) + 0.5;
  const double xm = tm;
  return {xm + 2.0 * std::sin(x1 * half_pi), xm + 4.0 * std::cos(x1 * half_pi)};
}

inline ObjectiveVector evaluate_wfg4(const DecisionVector& z, std::size_t k) {
  check_bounds(z);
  const std::size_t n = z.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / (2.0 * (i + 1));

  for (std::size_t i = 0; i < n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);

  const double t1 = r_sum(y, 0, k);
  const double tm = r_sum(y, k, n);
  return concave_shape(t1, tm);
}

inline ObjectiveVector evaluate_wfg9(const DecisionVector& z, std::size_t k) {
  check_bounds(z);
  const std::size_t n = z.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / (2.0 * (i + 1));

  std::vector<double> w = y;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double u = r_sum(y, i + 1, n);
    w[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
  }
  y = w;

  for (std::size_t i = 0; i < k; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
  for (std::size_t i = k; i < n; ++i) y[i] = s_multi(y[i], 30.0, 95.0, 0.35);

  const double t1 = r_nonsep(y, 0, k, k);
  const double tm = r_nonsep(y, k, n, n - k);
  return concave_shape(t1, tm);
}

/// Decision vector on the true WFG9 front: position parameter free, distance
/// parameters solved backwards through the parameter-dependent bias.
inline DecisionVector optimal_point_wfg9(std::size_t n, std::size_t k, double position01) {
  std::vector<double> y(n, 0.35);
  for (std::size_t i = 0; i < k; ++i) y[i] = position01;
  // Distance parameters must reach 0.35 after the b_param bias; y[n-1] is
  // unbiased, the rest invert the exponent given the mean of later raw values.
  for (std::size_t i = n - 1; i-- > k;) {
    const double u = r_sum(y, i + 1, n);
    const double A = 0.98 / 49.98;
    const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
    const double expo = 0.02 + (50.0 - 0.02) * v;
    y[i] = std::pow(0.35, 1.0 / expo);
  }
  DecisionVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = y[i] * 2.0 * (i + 1);
  return z;
}

} // namespace wfg

/// Uniform-in-parameter sample of the analytic front, both objectives
/// minimized; consecutive points are mutually non-dominated.
inline std::vector<ObjectiveVector> sample_dtlz2_front(std::size_t count) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  std::vector<ObjectiveVector> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = half_pi * static_cast<double>(i) / static_cast<double>(count - 1);
    pts.push_back({std::cos(t), std::sin(t)});
  }
  return pts;
}

/// WFG front for m=2: the ellipse (f1/2)^2 + (f2/4)^2 = 1 on the trade-off
/// branch.
inline std::vector<ObjectiveVector> sample_wfg_front(std::size_t count) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  std::vector<ObjectiveVector> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = half_pi * static_cast<double>(i) / static_cast<double>(count - 1);
    pts.push_back({2.0 * std::sin(t), 4.0 * std::cos(t)});
  }
  return pts;
}

inline Problem make_problem(const std::string& name, std::size_t n, std::size_t wfg_k = 1) {
  Problem p;
  p.name = name;
  p.n = n;
  if (name == "dtlz2") {
    p.bounds.lower.assign(n, 0.0);
    p.bounds.upper.assign(n, 1.0);
    p.evaluate = evaluate_dtlz2;
    p.sample_front = sample_dtlz2_front;
  } else if (name == "wfg4" || name == "wfg9") {
    p.bounds.lower.assign(n, 0.0);
    p.bounds.upper.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.bounds.upper[i] = 2.0 * (i + 1);
    if (name == "wfg4")
      p.evaluate = [wfg_k](const DecisionVector& x) { return wfg::evaluate_wfg4(x, wfg_k); };
    else
      p.evaluate = [wfg_k](const DecisionVector& x) { return wfg::evaluate_wfg9(x, wfg_k); };
    p.sample_front = sample_wfg_front;
  } else {
    throw std::invalid_argument("unknown problem: " + name);
  }
  return p;
}

} // namespace coneopt

#endif
