#include "rseda/rseda.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rseda/correlation.hpp"

namespace rseda {

namespace {

void validate_common(const Objective& objective, const Bounds& bounds,
                     const RsEdaConfig& config) {
  if (objective.arity() != bounds.dimension()) {
    throw std::invalid_argument("objective arity does not match bounds");
  }
  if (config.n_init == 0) throw std::invalid_argument("n_init must be positive");
  if (!(config.init_keep_fraction > 0.0 && config.init_keep_fraction <= 1.0) ||
      !(config.select_fraction > 0.0 && config.select_fraction <= 1.0)) {
    throw std::invalid_argument("fractions must lie in (0,1]");
  }
  if (config.inner_patience == 0 || config.outer_patience == 0) {
    throw std::invalid_argument("patience must be positive");
  }
  if (config.r_per_dim == 0) {
    throw std::invalid_argument("r_per_dim must be positive");
  }
}

Eigen::MatrixXd project_solutions(const std::vector<Solution>& solutions,
                                  const std::vector<std::size_t>& indices) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(solutions.size()),
                    static_cast<Eigen::Index>(indices.size()));
  for (std::size_t r = 0; r < solutions.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          solutions[r].params[indices[c]];
    }
  }
  return m;
}

const Solution& fittest(const std::vector<Solution>& batch) {
  const Solution* best = &batch.front();
  for (const auto& s : batch) {
    if (s.fitness > best->fitness) best = &s;
  }
  return *best;
}

}  // namespace

Eigen::MatrixXd uniform_population(const Bounds& bounds, std::size_t count,
                                   Rng& rng) {
  const auto d = bounds.dimension();
  const auto& lo = bounds.scaled_lower();
  const auto& hi = bounds.scaled_upper();
  Eigen::MatrixXd points(static_cast<Eigen::Index>(count),
                         static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      points(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rng.uniform(lo[c], hi[c]);
    }
  }
  return points;
}

std::vector<std::vector<double>> splice_samples(
    const std::vector<double>& incumbent,
    const std::vector<std::size_t>& indices, const Eigen::MatrixXd& samples) {
  if (static_cast<std::size_t>(samples.cols()) != indices.size()) {
    throw std::invalid_argument("sample width does not match subspace size");
  }
  std::vector<std::vector<double>> out(
      static_cast<std::size_t>(samples.rows()), incumbent);
  for (Eigen::Index r = 0; r < samples.rows(); ++r) {
    auto& candidate = out[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < indices.size(); ++c) {
      candidate[indices[c]] = samples(r, static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Pps init_pps(Objective& objective, const Bounds& bounds,
             const RsEdaConfig& config, Rng& rng) {
  validate_common(objective, bounds, config);
  if (config.max_evaluations < config.n_init) {
    throw std::runtime_error("budget too small for initialization");
  }
  const Eigen::MatrixXd points =
      uniform_population(bounds, config.n_init, rng);
  std::vector<Solution> solutions(config.n_init);
  for (std::size_t i = 0; i < config.n_init; ++i) {
    auto& s = solutions[i];
    s.params.resize(bounds.dimension());
    for (std::size_t c = 0; c < bounds.dimension(); ++c) {
      s.params[c] = points(static_cast<Eigen::Index>(i),
                           static_cast<Eigen::Index>(c));
    }
    s.fitness = objective.evaluate(bounds.from_scaled(s.params));
  }
  std::vector<Solution> kept =
      truncation_select(solutions, config.init_keep_fraction);
  Pps pps(kept.size());
  pps.update(std::move(kept));
  return pps;
}

void subspace_eda(Objective& objective, const Bounds& bounds,
                  const Subspace& sub, OptimizerState& state,
                  const RsEdaConfig& config, Rng& rng) {
  if (state.pps.empty()) throw std::invalid_argument("pps is empty");
  const std::size_t m = sub.indices.size();

  std::vector<Solution> selected = state.pps.members();
  std::size_t stall = 0;
  while (stall < config.inner_patience) {
    if (state.evaluations_used >= config.max_evaluations) {
      state.budget_exhausted = true;
      return;
    }
    const std::uint64_t remaining =
        config.max_evaluations - state.evaluations_used;
    const GaussianModel model = fit_gaussian(
        project_solutions(selected, sub.indices), config.covariance_floor);
    const std::size_t batch_size = static_cast<std::size_t>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(config.r_per_dim) * m, remaining));
    const Eigen::MatrixXd samples = sample_gaussian(model, batch_size, rng);

    std::vector<std::vector<double>> spliced =
        splice_samples(state.best.params, sub.indices, samples);
    std::vector<Solution> batch(batch_size);
    for (std::size_t i = 0; i < batch_size; ++i) {
      batch[i].params = bounds.repair_scaled(std::move(spliced[i]));
      batch[i].fitness =
          objective.evaluate(bounds.from_scaled(batch[i].params));
      ++state.evaluations_used;
    }

    state.pps.update(batch);
    const double prev = state.best.fitness;
    const Solution& batch_best = fittest(batch);
    if (batch_best.fitness > state.best.fitness) {
      state.best = batch_best;
      if (state.result != nullptr) {
        state.result->trace.push_back(
            {state.evaluations_used, state.best.fitness});
      }
    }
    if (relative_improvement(prev, state.best.fitness) >
        config.improvement_tolerance) {
      stall = 0;
    } else {
      ++stall;
    }
    selected = truncation_select(batch, config.select_fraction);
  }
}

RunResult optimize(Objective& objective, const Bounds& bounds,
                   const RsEdaConfig& config, Rng& rng) {
  validate_common(objective, bounds, config);
  const auto kept = static_cast<std::size_t>(std::ceil(
      config.init_keep_fraction * static_cast<double>(config.n_init)));
  if (kept < 3) {
    throw std::invalid_argument(
        "config keeps fewer than 3 solutions in the pps; increase n_init or "
        "init_keep_fraction");
  }

  RunResult result;
  OptimizerState state;
  state.result = &result;
  state.pps = init_pps(objective, bounds, config, rng);
  state.evaluations_used = config.n_init;
  state.best = state.pps.best();
  result.trace.push_back({state.evaluations_used, state.best.fitness});

  std::size_t outer_stall = 0;
  while (outer_stall < config.outer_patience && !state.budget_exhausted) {
    if (state.evaluations_used >= config.max_evaluations) {
      state.budget_exhausted = true;
      break;
    }
    const double prev = state.best.fitness;
    const CorrelationMatrix corr =
        partial_correlation_matrix(state.pps.as_matrix());
    const std::vector<Subspace> subspaces = partition_subspaces(corr, rng);
    for (const Subspace& sub : subspaces) {
      subspace_eda(objective, bounds, sub, state, config, rng);
      if (state.budget_exhausted) break;
    }
    result.trace.push_back({state.evaluations_used, state.best.fitness});
    if (relative_improvement(prev, state.best.fitness) >
        config.improvement_tolerance) {
      outer_stall = 0;
    } else {
      ++outer_stall;
    }
  }

  result.reason = state.budget_exhausted ? TerminationReason::budget_exhausted
                                         : TerminationReason::converged;
  result.best.params = bounds.from_scaled(state.best.params);
  result.best.fitness = state.best.fitness;
  result.evaluations_used = state.evaluations_used;
  return result;
}

RunResult optimize(Objective& objective, const Bounds& bounds,
                   const RsEdaConfig& config) {
  Rng rng(config.seed);
  return optimize(objective, bounds, config, rng);
}

}  // namespace rseda
