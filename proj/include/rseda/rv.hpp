#ifndef RSEDA_RV_HPP
#define RSEDA_RV_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rseda::rv {

/// One radial-velocity observation: epoch (days), velocity and its
/// measurement error (m/s).
struct Observation {
  double t = 0.0;
  double v = 0.0;
  double sigma = 0.0;
};

struct RvDataset {
  std::vector<Observation> rows;

  std::size_t size() const { return rows.size(); }
};

/// Keplerian orbit parameters of a single planet.
struct PlanetParams {
  double K = 0.0;      // velocity semi-amplitude, m/s (non-negative)
  double P = 1.0;      // orbital period, days
  double e = 0.0;      // eccentricity, [0, 1)
  double omega = 0.0;  // argument of periastron, rad
  double mu0 = 0.0;    // mean anomaly at t = 0, rad
};

/// Full j-planet model: systemic velocity, stellar jitter, planet list.
/// Parameter dimension is 2 + 5j.
struct RvModelParams {
  double c_offset = 0.0;  // m/s
  double jitter = 0.0;    // m/s, added in quadrature to sigma
  std::vector<PlanetParams> planets;

  std::size_t dimension() const { return 2 + 5 * planets.size(); }
};

/// Throws std::invalid_argument naming the violated invariant.
void validate(const RvModelParams& params);
void validate(const RvDataset& data);

/// Eccentric anomaly E in [0, 2pi) with |E - e sin E - M| < 1e-12.
/// Newton from E0 = M + e sin M, bisection fallback. Throws std::domain_error
/// for e outside [0, 1).
double solve_kepler(double mean_anomaly, double e);

/// True anomaly from eccentric anomaly, computed in two-argument arctangent
/// form (continuous at E = pi), result in [0, 2pi).
double true_anomaly(double eccentric_anomaly, double e);

/// Velocity shift of one planet at time t (days): K[cos(omega+T) + e cos omega].
double velocity_shift(double t, const PlanetParams& phi);

/// c_offset plus the sum of the per-planet velocity shifts.
double model_velocity(double t, const RvModelParams& params);

/// Gaussian log-likelihood with per-point variance sigma_i^2 + jitter^2.
double log_likelihood(const RvModelParams& params, const RvDataset& data);

/// Bayesian information criterion: -2 ln L + k ln n.
double bic(double ln_l_hat, int k, std::size_t n);

/// Synthetic dataset: model curve plus Gaussian noise of variance
/// sigma_i^2 + jitter^2, deterministic in seed.
RvDataset generate_synthetic(const RvModelParams& params,
                             const std::vector<double>& times,
                             const std::vector<double>& sigmas,
                             std::uint64_t seed);

/// CSV exchange format: header `t_days,rv_mps,sigma_mps`, one observation
/// per row. Parse errors throw std::runtime_error naming the offending row.
RvDataset load_rv_csv(const std::string& path);
void save_rv_csv(const std::string& path, const RvDataset& data);

std::string params_to_json(const RvModelParams& params);
RvModelParams params_from_json(const std::string& text);

}  // namespace rseda::rv

#endif  // RSEDA_RV_HPP
