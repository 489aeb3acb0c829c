#ifndef CONEOPT_VARIATION_HPP
#define CONEOPT_VARIATION_HPP

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>

#include "coneopt/core.hpp"

namespace coneopt {

using Rng = std::mt19937_64;

struct VariationConfig {
  double crossover_probability = 1.0;
  double crossover_eta = 20.0; // SBX distribution index
  double mutation_probability = 0.1;
  double mutation_eta = 20.0; // polynomial mutation distribution index
};

/// Binary tournament on penalized front level; ties resolved by coin flip.
inline const Individual& binary_tournament(const Population& pop, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
  const Individual& a = pop.members[pick(rng)];
  const Individual& b = pop.members[pick(rng)];
  if (a.penalized_front_level < b.penalized_front_level) return a;
  if (b.penalized_front_level < a.penalized_front_level) return b;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  return coin(rng) < 0.5 ? a : b;
}

/// Simulated binary crossover. Children are clipped to the bounds.
inline std::pair<DecisionVector, DecisionVector>
sbx_crossover(const DecisionVector& p1, const DecisionVector& p2, const Bounds& bounds,
              const VariationConfig& cfg, Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  DecisionVector c1 = p1;
  DecisionVector c2 = p2;
  if (u01(rng) > cfg.crossover_probability) return {c1, c2};

  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (u01(rng) > 0.5) continue;
    const double u = u01(rng);
    double beta;
    if (u <= 0.5)
      beta = std::pow(2.0 * u, 1.0 / (cfg.crossover_eta + 1.0));
    else
      beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (cfg.crossover_eta + 1.0));
    c1[i] = 0.5 * ((1.0 + beta) * p1[i] + (1.0 - beta) * p2[i]);
    c2[i] = 0.5 * ((1.0 - beta) * p1[i] + (1.0 + beta) * p2[i]);
    if (u01(rng) < 0.5) std::swap(c1[i], c2[i]); // variable-wise side swap
  }
  bounds.clip(c1);
  bounds.clip(c2);
  return {c1, c2};
}

/// Polynomial mutation; each coordinate mutates independently.
inline DecisionVector polynomial_mutation(const DecisionVector& x, const Bounds& bounds,
                                          const VariationConfig& cfg, Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  DecisionVector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (u01(rng) > cfg.mutation_probability) continue;
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    const double range = hi - lo;
    if (range <= 0.0) continue;
    const double u = u01(rng);
    const double mpow = 1.0 / (cfg.mutation_eta + 1.0);
    double delta;
    if (u < 0.5) {
      const double d = (y[i] - lo) / range;
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d, cfg.mutation_eta + 1.0);
      delta = std::pow(val, mpow) - 1.0;
    } else {
      const double d = (hi - y[i]) / range;
      const double val =
          2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d, cfg.mutation_eta + 1.0);
      delta = 1.0 - std::pow(val, mpow);
    }
    y[i] += delta * range;
  }
  bounds.clip(y);
  return y;
}

} // namespace coneopt

#endif
