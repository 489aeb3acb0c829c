#ifndef CONEOPT_ALGORITHMS_HPP
#define CONEOPT_ALGORITHMS_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "coneopt/cone.hpp"
#include "coneopt/core.hpp"
#include "coneopt/dominance.hpp"
#include "coneopt/dwu.hpp"
#include "coneopt/problems.hpp"
#include "coneopt/variation.hpp"

namespace coneopt {

struct AlgorithmConfig {
  std::size_t population_size = 100;
  long max_evaluations = 100000;
  PreferenceCone cone{{1.0, 1.0}, 0.3, 0.3, 1.0};
  VariationConfig variation;
  std::uint64_t seed = 0;
};

struct RunResult {
  Population population;
  double seconds = 0.0;
  bool initialization_only = false;
};

/// Standard crowding distance over one front, normalized by the front's own
/// per-objective range; zero range contributes nothing.
inline std::vector<double> crowding_distance(const std::vector<ObjectiveVector>& front) {
  if (front.empty())
    throw std::invalid_argument("crowding_distance: empty front");
  const std::size_t n = front.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  const std::size_t m = front[0].size();
  std::vector<std::size_t> order(n);
  for (std::size_t obj = 0; obj < m; ++obj) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return front[a][obj] < front[b][obj]; });
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double range = front[order.back()][obj] - front[order.front()][obj];
    if (range <= 0.0) continue;
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (dist[order[i]] != inf)
        dist[order[i]] += (front[order[i + 1]][obj] - front[order[i - 1]][obj]) / range;
  }
  return dist;
}

namespace detail {

/// Recomputes all per-generation bookkeeping from scratch over one set.
inline void refresh_bookkeeping(std::vector<Individual>& members, const PreferenceCone& cone) {
  strength(members);
  raw_dominance(members);
  nondominated_sort(members);
  for (auto& ind : members) {
    ind.angular_distance = angular_distance(ind.objectives, cone);
    penalized_front_level(ind, cone);
  }
}

inline Population initial_population(const Problem& problem, const AlgorithmConfig& cfg,
                                     Rng& rng) {
  Population pop;
  pop.members.resize(cfg.population_size);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (auto& ind : pop.members) {
    ind.decision.resize(problem.n);
    for (std::size_t i = 0; i < problem.n; ++i) {
      const double lo = problem.bounds.lower[i];
      const double hi = problem.bounds.upper[i];
      ind.decision[i] = lo + u01(rng) * (hi - lo);
    }
    ind.objectives = problem.evaluate(ind.decision);
  }
  pop.evaluations = static_cast<long>(cfg.population_size);
  return pop;
}

/// N offspring from N/2 tournament-selected couples, evaluated.
inline std::vector<Individual> make_offspring(const Problem& problem, const Population& pop,
                                              const AlgorithmConfig& cfg, Rng& rng) {
  std::vector<Individual> offspring;
  offspring.reserve(cfg.population_size);
  while (offspring.size() < cfg.population_size) {
    const Individual& p1 = binary_tournament(pop, rng);
    const Individual& p2 = binary_tournament(pop, rng);
    auto [c1, c2] = sbx_crossover(p1.decision, p2.decision, problem.bounds, cfg.variation, rng);
    for (auto* child : {&c1, &c2}) {
      if (offspring.size() == cfg.population_size) break;
      Individual ind;
      ind.decision = polynomial_mutation(*child, problem.bounds, cfg.variation, rng);
      ind.objectives = problem.evaluate(ind.decision);
      offspring.push_back(std::move(ind));
    }
  }
  return offspring;
}

template <typename Survival>
RunResult generational_loop(const Problem& problem, const AlgorithmConfig& cfg,
                            Survival survive) {
  if (cfg.population_size % 2 != 0)
    throw std::invalid_argument("population size must be even");
  if (cfg.max_evaluations < static_cast<long>(cfg.population_size))
    throw std::invalid_argument("evaluation budget below one population");

  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  Population pop = initial_population(problem, cfg, rng);
  refresh_bookkeeping(pop.members, cfg.cone);

  bool ran_generation = false;
  while (pop.evaluations + static_cast<long>(cfg.population_size) <= cfg.max_evaluations) {
    std::vector<Individual> merged = pop.members;
    std::vector<Individual> offspring = make_offspring(problem, pop, cfg, rng);
    pop.evaluations += static_cast<long>(offspring.size());
    merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
    refresh_bookkeeping(merged, cfg.cone);
    pop.members = survive(merged);
    ++pop.generation;
    ran_generation = true;
  }

  refresh_bookkeeping(pop.members, cfg.cone);
  RunResult result;
  result.population = std::move(pop);
  result.initialization_only = !ran_generation;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

} // namespace detail

/// Generational loop with cone-penalized DWU survival: the merged 2N set is
/// reduced to N by the greedy max-min heuristic on c_w_d.
inline RunResult run_c_dwu(const Problem& problem, const AlgorithmConfig& cfg) {
  return detail::generational_loop(problem, cfg, [&](std::vector<Individual>& merged) {
    SelectionResult sel = dwu_select(merged, cfg.population_size, &cfg.cone);
    std::vector<Individual> next;
    next.reserve(cfg.population_size);
    for (std::size_t idx : sel.chosen) next.push_back(std::move(merged[idx]));
    return next;
  });
}

/// NSGA-II with ranking on the penalized front level; the last partial rank
/// is truncated by descending crowding distance.
inline RunResult run_c_nsgaii(const Problem& problem, const AlgorithmConfig& cfg) {
  return detail::generational_loop(problem, cfg, [&](std::vector<Individual>& merged) {
    int max_level = 0;
    for (const auto& ind : merged)
      max_level = std::max(max_level, ind.penalized_front_level);

    std::vector<std::vector<std::size_t>> ranks(static_cast<std::size_t>(max_level));
    for (std::size_t i = 0; i < merged.size(); ++i)
      ranks[static_cast<std::size_t>(merged[i].penalized_front_level - 1)].push_back(i);

    std::vector<Individual> next;
    next.reserve(cfg.population_size);
    for (auto& rank : ranks) {
      if (rank.empty()) continue;
      std::vector<ObjectiveVector> objs;
      objs.reserve(rank.size());
      for (std::size_t i : rank) objs.push_back(merged[i].objectives);
      const std::vector<double> crowd = crowding_distance(objs);
      for (std::size_t j = 0; j < rank.size(); ++j) merged[rank[j]].crowding = crowd[j];

      if (next.size() + rank.size() <= cfg.population_size) {
        for (std::size_t i : rank) next.push_back(std::move(merged[i]));
      } else {
        std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
          return merged[a].crowding > merged[b].crowding;
        });
        for (std::size_t i : rank) {
          if (next.size() == cfg.population_size) break;
          next.push_back(std::move(merged[i]));
        }
      }
      if (next.size() == cfg.population_size) break;
    }
    return next;
  });
}

} // namespace coneopt

#endif
