#ifndef CONEOPT_CONE_HPP
#define CONEOPT_CONE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "coneopt/core.hpp"

namespace coneopt {

/// Preference cone in objective space: axis v, opening angle theta, plus the
/// two penalty intensities (alpha for front levels, beta for the uniformity
/// weight).
struct PreferenceCone {
  std::vector<double> axis;
  double theta = 0.3;
  double alpha = 0.3;
  double beta = 1.0;
};

/// Angle between an objective vector and the cone axis, in [0, pi].
/// Objectives are used unnormalized. A zero vector signals an evaluation bug
/// upstream and is rejected.
inline double angular_distance(const ObjectiveVector& y, const PreferenceCone& cone) {
  const double ny = norm2(y);
  const double nv = norm2(cone.axis);
  if (ny == 0.0)
    throw std::domain_error("angular_distance: zero objective vector");
  double dot = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * cone.axis[i];
  const double c = std::clamp(dot / (ny * nv), -1.0, 1.0);
  return std::acos(c);
}

inline bool in_cone(const ObjectiveVector& y, const PreferenceCone& cone) {
  return angular_distance(y, cone) <= cone.theta;
}

inline bool in_cone(double phi, const PreferenceCone& cone) {
  return phi <= cone.theta;
}

/// Integer front-level penalty floor(e^(alpha (phi - theta))).
inline int front_penalty(double phi, const PreferenceCone& cone) {
  return static_cast<int>(std::floor(std::exp(cone.alpha * (phi - cone.theta))));
}

/// Adds the front penalty when the individual sits outside the cone.
/// Writes the result into penalized_front_level and returns it.
inline int penalized_front_level(Individual& ind, const PreferenceCone& cone) {
  int level = ind.front_level;
  if (ind.angular_distance > cone.theta)
    level += front_penalty(ind.angular_distance, cone);
  ind.penalized_front_level = level;
  return level;
}

/// Real-valued penalty e^(beta (phi - theta)), subtracted from the pairwise
/// uniformity weight when an endpoint is outside the cone. No floor.
inline double dwu_penalty(double phi, const PreferenceCone& cone) {
  return std::exp(cone.beta * (phi - cone.theta));
}

} // namespace coneopt

#endif
