#ifndef RSEDA_EMNA_HPP
#define RSEDA_EMNA_HPP

#include <cstdint>

#include "rseda/core.hpp"
#include "rseda/rng.hpp"
#include "rseda/trace.hpp"

namespace rseda {

struct EmnaConfig {
  std::size_t population_size = 0;
  double select_fraction = 0.2;
  std::uint64_t max_evaluations = 0;
  double improvement_tolerance = 1e-10;
  std::size_t patience = 5;
  double covariance_floor = 1e-12;
  std::uint64_t seed = 0;
};

/// Full-space Gaussian EDA baseline: uniform initial population, then
/// generational truncation-select / full-dimensional Gaussian fit / resample.
/// The population is replaced every generation; the returned best is tracked
/// elitistically so the trace stays monotone even if the population degrades.
RunResult emna_optimize(Objective& objective, const Bounds& bounds,
                        const EmnaConfig& config, Rng& rng);
RunResult emna_optimize(Objective& objective, const Bounds& bounds,
                        const EmnaConfig& config);

}  // namespace rseda

#endif  // RSEDA_EMNA_HPP
