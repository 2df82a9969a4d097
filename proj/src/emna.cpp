#include "rseda/emna.hpp"

#include <algorithm>
#include <stdexcept>

#include "rseda/gaussian.hpp"
#include "rseda/rseda.hpp"

namespace rseda {

namespace {

Eigen::MatrixXd full_matrix(const std::vector<Solution>& solutions,
                            std::size_t d) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(solutions.size()),
                    static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < solutions.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          solutions[r].params[c];
    }
  }
  return m;
}

}  // namespace

RunResult emna_optimize(Objective& objective, const Bounds& bounds,
                        const EmnaConfig& config, Rng& rng) {
  const std::size_t d = bounds.dimension();
  if (objective.arity() != d) {
    throw std::invalid_argument("objective arity does not match bounds");
  }
  if (config.population_size < 2) {
    throw std::invalid_argument("population_size must be at least 2");
  }
  if (!(config.select_fraction > 0.0 && config.select_fraction <= 1.0)) {
    throw std::invalid_argument("fractions must lie in (0,1]");
  }
  if (config.patience == 0) {
    throw std::invalid_argument("patience must be positive");
  }
  if (config.max_evaluations < config.population_size) {
    throw std::runtime_error("budget smaller than one population");
  }

  RunResult result;
  std::uint64_t used = 0;

  const Eigen::MatrixXd init =
      uniform_population(bounds, config.population_size, rng);
  std::vector<Solution> population(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    auto& s = population[i];
    s.params.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
      s.params[c] =
          init(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    }
    s.fitness = objective.evaluate(bounds.from_scaled(s.params));
    ++used;
  }

  Solution best = population.front();
  for (const auto& s : population) {
    if (s.fitness > best.fitness) best = s;
  }
  result.trace.push_back({used, best.fitness});
  std::vector<Solution> selected =
      truncation_select(population, config.select_fraction);

  std::size_t stall = 0;
  bool exhausted = false;
  while (stall < config.patience) {
    if (used >= config.max_evaluations) {
      exhausted = true;
      break;
    }
    const std::uint64_t remaining = config.max_evaluations - used;
    const GaussianModel model =
        fit_gaussian(full_matrix(selected, d), config.covariance_floor);
    const auto batch_size = static_cast<std::size_t>(
        std::min<std::uint64_t>(config.population_size, remaining));
    const Eigen::MatrixXd samples = sample_gaussian(model, batch_size, rng);

    population.assign(batch_size, Solution{});
    for (std::size_t i = 0; i < batch_size; ++i) {
      auto& s = population[i];
      s.params.resize(d);
      for (std::size_t c = 0; c < d; ++c) {
        s.params[c] = samples(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(c));
      }
      s.params = bounds.repair_scaled(std::move(s.params));
      s.fitness = objective.evaluate(bounds.from_scaled(s.params));
      ++used;
    }

    const double prev = best.fitness;
    for (const auto& s : population) {
      if (s.fitness > best.fitness) best = s;
    }
    if (relative_improvement(prev, best.fitness) >
        config.improvement_tolerance) {
      stall = 0;
    } else {
      ++stall;
    }
    selected = truncation_select(population, config.select_fraction);
    result.trace.push_back({used, best.fitness});
  }

  result.reason = exhausted ? TerminationReason::budget_exhausted
                            : TerminationReason::converged;
  result.best.params = bounds.from_scaled(best.params);
  result.best.fitness = best.fitness;
  result.evaluations_used = used;
  return result;
}

RunResult emna_optimize(Objective& objective, const Bounds& bounds,
                        const EmnaConfig& config) {
  Rng rng(config.seed);
  return emna_optimize(objective, bounds, config, rng);
}

}  // namespace rseda
