#ifndef CONEOPT_METRICS_HPP
#define CONEOPT_METRICS_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "coneopt/cone.hpp"
#include "coneopt/core.hpp"
#include "coneopt/dwu.hpp"
#include "coneopt/problems.hpp"

namespace coneopt {

/// Analytic front samples restricted to the preference cone.
struct ReferenceSet {
  std::vector<ObjectiveVector> points;
};

inline ReferenceSet roi_reference_set(const Problem& problem, const PreferenceCone& cone,
                                      std::size_t count = 10000) {
  ReferenceSet ref;
  for (auto& y : problem.sample_front(count))
    if (in_cone(y, cone)) ref.points.push_back(std::move(y));
  if (ref.points.size() < 2)
    throw std::runtime_error("roi_reference_set: cone misses the sampled front");
  return ref;
}

/// Mean distance from each reference point to its nearest solution.
inline double igd(const ReferenceSet& ref, const std::vector<ObjectiveVector>& sols) {
  if (ref.points.empty() || sols.empty())
    throw std::invalid_argument("igd: empty input");
  double total = 0.0;
  for (const auto& r : ref.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sols) {
      const double d = euclidean_distance(r, s);
      if (d < best) best = d;
    }
    total += best;
  }
  return total / static_cast<double>(ref.points.size());
}

/// Eq.-4 uniformity on the final decision set.
inline double final_uniformity(const std::vector<DecisionVector>& sols) {
  return uniformity(sols);
}

/// Uniformity on decision vectors rescaled to [0,1] per coordinate.
inline double final_uniformity_normalized(const std::vector<DecisionVector>& sols,
                                          const Bounds& bounds) {
  std::vector<DecisionVector> scaled(sols);
  for (auto& x : scaled)
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double range = bounds.upper[i] - bounds.lower[i];
      x[i] = range > 0.0 ? (x[i] - bounds.lower[i]) / range : 0.0;
    }
  return uniformity(scaled);
}

inline double roi_membership_rate(const std::vector<ObjectiveVector>& sols,
                                  const PreferenceCone& cone) {
  if (sols.empty())
    throw std::invalid_argument("roi_membership_rate: empty input");
  std::size_t inside = 0;
  for (const auto& s : sols)
    if (in_cone(s, cone)) ++inside;
  return static_cast<double>(inside) / static_cast<double>(sols.size());
}

struct MetricReport {
  double igd = 0.0;
  double uniformity = 0.0;
  double uniformity_normalized = 0.0;
  double roi_membership_rate = 0.0;
  std::size_t reference_size = 0;
};

} // namespace coneopt

#endif
