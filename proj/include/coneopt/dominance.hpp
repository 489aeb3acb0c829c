#ifndef CONEOPT_DOMINANCE_HPP
#define CONEOPT_DOMINANCE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coneopt/core.hpp"

namespace coneopt {

/// Ordered front index sets FL_1, FL_2, ... over a population.
struct FrontPartition {
  std::vector<std::vector<std::size_t>> fronts;
};

/// Fast non-dominated sort (domination counts + dominated lists, O(n^2 m)).
/// Writes 1-based front_level into each individual and returns the partition.
inline FrontPartition nondominated_sort(std::vector<Individual>& pop) {
  if (pop.empty())
    throw std::invalid_argument("nondominated_sort: empty population");

  const std::size_t n = pop.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<int> count(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(pop[i].objectives, pop[j].objectives)) {
        dominated[i].push_back(j);
        ++count[j];
      } else if (dominates(pop[j].objectives, pop[i].objectives)) {
        dominated[j].push_back(i);
        ++count[i];
      }
    }
  }

  FrontPartition part;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] == 0) current.push_back(i);

  int level = 1;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      pop[i].front_level = level;
      for (std::size_t j : dominated[i])
        if (--count[j] == 0) next.push_back(j);
    }
    part.fronts.push_back(std::move(current));
    current = std::move(next);
    ++level;
  }
  return part;
}

/// s(x): how many members of the population x's image dominates.
inline std::vector<int> strength(std::vector<Individual>& pop) {
  const std::size_t n = pop.size();
  std::vector<int> s(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && dominates(pop[i].objectives, pop[j].objectives)) ++s[i];
  for (std::size_t i = 0; i < n; ++i) pop[i].strength = s[i];
  return s;
}

/// d(x): sum of s over all members whose image dominates x's image.
/// Requires strength() to have run on the same population.
inline std::vector<int> raw_dominance(std::vector<Individual>& pop) {
  const std::size_t n = pop.size();
  std::vector<int> d(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && dominates(pop[j].objectives, pop[i].objectives))
        d[i] += pop[j].strength;
  for (std::size_t i = 0; i < n; ++i) pop[i].raw_dominance = d[i];
  return d;
}

} // namespace coneopt

#endif
