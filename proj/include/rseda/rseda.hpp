#ifndef RSEDA_RSEDA_HPP
#define RSEDA_RSEDA_HPP

#include <cstdint>
#include <vector>

#include "rseda/core.hpp"
#include "rseda/gaussian.hpp"
#include "rseda/rng.hpp"
#include "rseda/subspace.hpp"
#include "rseda/trace.hpp"

namespace rseda {

struct RsEdaConfig {
  std::size_t n_init = 20000;        // uniform initialization sample count
  double init_keep_fraction = 0.2;   // PPS keeps this fraction of the init draw
  std::size_t r_per_dim = 100;       // batch size per subspace dimension
  double select_fraction = 0.2;      // truncation fraction inside each batch
  std::size_t inner_patience = 5;    // stalled inner iterations before moving on
  std::size_t outer_patience = 3;    // stalled outer iterations before stopping
  std::uint64_t max_evaluations = 0; // total evaluation budget (required)
  double improvement_tolerance = 1e-10;  // relative
  double covariance_floor = 1e-12;
  std::uint64_t seed = 0;
};

/// Shared optimizer bookkeeping. Solutions are kept in scaled coordinates
/// (log space for log-scaled dimensions); they are converted back to natural
/// units only when a run result is assembled.
struct OptimizerState {
  Solution best;
  Pps pps;
  std::uint64_t evaluations_used = 0;
  bool budget_exhausted = false;
  RunResult* result = nullptr;  // optional trace sink
};

/// Relative improvement of `next` over `prev` on the maximization scale.
inline double relative_improvement(double prev, double next) {
  return (next - prev) / std::max(1.0, std::abs(prev));
}

/// Uniform sample over the scaled box, one row per point, coordinates drawn
/// in index order, points in row order.
Eigen::MatrixXd uniform_population(const Bounds& bounds, std::size_t count,
                                   Rng& rng);

/// Full-dimensional candidates: a copy of `incumbent` per sample row with the
/// coordinates listed in `indices` replaced by that row. All other
/// coordinates are bit-identical to the incumbent.
std::vector<std::vector<double>> splice_samples(
    const std::vector<double>& incumbent,
    const std::vector<std::size_t>& indices, const Eigen::MatrixXd& samples);

/// Uniform initialization of the Pool of Promising Solutions: draw
/// config.n_init points, evaluate, keep the fittest init_keep_fraction.
/// The PPS capacity is fixed at the retained count.
Pps init_pps(Objective& objective, const Bounds& bounds,
             const RsEdaConfig& config, Rng& rng);

/// Gaussian EDA restricted to one subspace: fit, sample r_per_dim*m
/// candidates spliced into the incumbent best, clamp, evaluate, select,
/// update PPS and the best estimate; repeat until the best stalls for
/// inner_patience iterations or the budget runs out.
void subspace_eda(Objective& objective, const Bounds& bounds,
                  const Subspace& sub, OptimizerState& state,
                  const RsEdaConfig& config, Rng& rng);

/// Full RS-EDA loop: initialize the PPS, then iterate
/// correlate -> partition -> per-subspace EDA until the global best stalls
/// for outer_patience outer iterations or the budget runs out.
RunResult optimize(Objective& objective, const Bounds& bounds,
                   const RsEdaConfig& config, Rng& rng);
RunResult optimize(Objective& objective, const Bounds& bounds,
                   const RsEdaConfig& config);

}  // namespace rseda

#endif  // RSEDA_RSEDA_HPP
