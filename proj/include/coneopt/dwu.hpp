#ifndef CONEOPT_DWU_HPP
#define CONEOPT_DWU_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coneopt/cone.hpp"
#include "coneopt/core.hpp"

namespace coneopt {

/// U(R): minimum pairwise Euclidean distance in decision space.
inline double uniformity(const std::vector<DecisionVector>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("uniformity: need at least two points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = euclidean_distance(points[i], points[j]);
      if (d < best) best = d;
    }
  return best;
}

/// Dominance-weighted uniformity: decision distance discounted by the gap in
/// raw dominance d(x).
inline double w_d(const Individual& a, const Individual& b) {
  const double dist = euclidean_distance(a.decision, b.decision);
  const int gap = a.raw_dominance > b.raw_dominance
                      ? a.raw_dominance - b.raw_dominance
                      : b.raw_dominance - a.raw_dominance;
  return dist / (gap + 1);
}

/// Cone-penalized w_d. When either endpoint lies outside the cone, the
/// penalty for the worse of the two angles is subtracted; the result may be
/// negative. Requires cached angular distances.
inline double c_w_d(const Individual& a, const Individual& b, const PreferenceCone& cone) {
  const double base = w_d(a, b);
  const double phi = std::max(a.angular_distance, b.angular_distance);
  if (phi > cone.theta) return base - dwu_penalty(phi, cone);
  return base;
}

/// Greedily chosen representative subset, in selection order.
struct SelectionResult {
  std::vector<std::size_t> chosen;
};

/// Greedy max-min selection of k individuals from pool under the
/// dominance-weighted uniformity weight (cone-penalized when a cone is
/// given). Seeds with the best pair among the non-dominated members, then
/// repeatedly adds the candidate maximizing its minimum weight to the chosen
/// set. Ties break toward the lowest pool index. Requires front_level,
/// raw_dominance and (with a cone) angular_distance to be set on the pool.
inline SelectionResult dwu_select(const std::vector<Individual>& pool, std::size_t k,
                                  const PreferenceCone* cone = nullptr) {
  const std::size_t n = pool.size();
  if (k < 2 || n < k)
    throw std::invalid_argument("dwu_select: need |pool| >= k >= 2");

  // Full pairwise weight matrix; the greedy chain reuses every entry.
  std::vector<double> weight(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = cone ? c_w_d(pool[i], pool[j], *cone) : w_d(pool[i], pool[j]);
      weight[i * n + j] = w;
      weight[j * n + i] = w;
    }

  std::vector<std::size_t> nd;
  for (std::size_t i = 0; i < n; ++i)
    if (pool[i].front_level == 1) nd.push_back(i);

  SelectionResult result;
  std::vector<char> taken(n, 0);
  auto pick = [&](std::size_t idx) {
    result.chosen.push_back(idx);
    taken[idx] = 1;
  };

  if (nd.size() >= 2) {
    std::size_t bi = nd[0], bj = nd[1];
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nd.size(); ++a)
      for (std::size_t b = a + 1; b < nd.size(); ++b)
        if (weight[nd[a] * n + nd[b]] > best) {
          best = weight[nd[a] * n + nd[b]];
          bi = nd[a];
          bj = nd[b];
        }
    pick(bi);
    pick(bj);
  } else {
    // Degenerate pool with a single non-dominated member: pair it with its
    // best partner under the weight.
    const std::size_t seed = nd.empty() ? 0 : nd[0];
    pick(seed);
    std::size_t partner = n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i] && weight[seed * n + i] > best) {
        best = weight[seed * n + i];
        partner = i;
      }
    pick(partner);
  }

  std::vector<double> min_weight(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r : result.chosen)
      if (weight[i * n + r] < min_weight[i]) min_weight[i] = weight[i * n + r];

  while (result.chosen.size() < k) {
    std::size_t best_idx = n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i] && min_weight[i] > best) {
        best = min_weight[i];
        best_idx = i;
      }
    pick(best_idx);
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i] && weight[i * n + best_idx] < min_weight[i])
        min_weight[i] = weight[i * n + best_idx];
  }
  return result;
}

} // namespace coneopt

#endif
