#ifndef CONEOPT_CORE_HPP
#define CONEOPT_CORE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace coneopt {

using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }

  bool contains(const DecisionVector& x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
  }

  void clip(DecisionVector& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < lower[i]) x[i] = lower[i];
      if (x[i] > upper[i]) x[i] = upper[i];
    }
  }
};

/// One candidate solution with its cached per-generation bookkeeping.
struct Individual {
  DecisionVector decision;
  ObjectiveVector objectives;
  int strength = 0;              // number of members this one dominates
  int raw_dominance = 0;         // sum of strengths of its dominators
  int front_level = 0;           // 1-based, 0 = not yet sorted
  int penalized_front_level = 0;
  double angular_distance = 0.0; // radians from the cone axis
  double crowding = 0.0;
};

struct Population {
  std::vector<Individual> members;
  long generation = 0;
  long evaluations = 0;

  std::size_t size() const { return members.size(); }
};

/// Pareto dominance for minimization: a is no worse everywhere and a != b.
/// Equality is exact; epsilon-dominance is a different relation.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: objective vectors differ in length");
  bool strictly_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly_better = true;
  }
  return strictly_better;
}

inline double euclidean_distance(const std::vector<double>& a,
                                 const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

} // namespace coneopt

#endif
