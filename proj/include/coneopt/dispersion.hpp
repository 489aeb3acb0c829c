#ifndef CONEOPT_DISPERSION_HPP
#define CONEOPT_DISPERSION_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "coneopt/core.hpp"

namespace coneopt {

/// Per-point decision-space classification: nearest coordinate axis (sector,
/// 1-based), the angle sigma to it, and the point's norm rho.
struct SectorRecord {
  std::size_t index = 0;
  std::size_t sector = 0;
  double sigma = 0.0;
  double rho = 0.0;
};

inline SectorRecord sector_classify(const DecisionVector& x) {
  const double rho = norm2(x);
  if (rho == 0.0)
    throw std::domain_error("sector_classify: zero vector");
  SectorRecord rec;
  rec.rho = rho;
  double best_cos = -2.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = x[i] / rho; // cosine of the angle to axis e_i
    if (c > best_cos) {
      best_cos = c;
      rec.sector = i + 1;
    }
  }
  if (best_cos > 1.0) best_cos = 1.0;
  if (best_cos < -1.0) best_cos = -1.0;
  rec.sigma = std::acos(best_cos);
  return rec;
}

inline std::vector<SectorRecord> dispersion_table(const std::vector<DecisionVector>& sols) {
  if (sols.empty())
    throw std::invalid_argument("dispersion_table: empty input");
  std::vector<SectorRecord> table;
  table.reserve(sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    SectorRecord rec = sector_classify(sols[i]);
    rec.index = i;
    table.push_back(rec);
  }
  return table;
}

} // namespace coneopt

#endif
