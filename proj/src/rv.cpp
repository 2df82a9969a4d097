#include "rseda/rv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rseda/rng.hpp"

namespace rseda::rv {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

}  // namespace

void validate(const RvModelParams& params) {
  if (!(params.jitter >= 0.0)) {
    throw std::invalid_argument("jitter must be non-negative");
  }
  if (!std::isfinite(params.c_offset)) {
    throw std::invalid_argument("c_offset must be finite");
  }
  for (const auto& p : params.planets) {
    if (!(p.K >= 0.0)) {
      throw std::invalid_argument("semi-amplitude K must be non-negative");
    }
    if (!(p.P > 0.0)) throw std::invalid_argument("period must be positive");
    if (!(p.e >= 0.0 && p.e < 1.0)) {
      throw std::invalid_argument("eccentricity out of range");
    }
    if (!std::isfinite(p.omega) || !std::isfinite(p.mu0)) {
      throw std::invalid_argument("angles must be finite");
    }
  }
}

void validate(const RvDataset& data) {
  if (data.rows.empty()) {
    throw std::invalid_argument("dataset must contain at least one row");
  }
  for (const auto& row : data.rows) {
    if (!std::isfinite(row.t) || !std::isfinite(row.v)) {
      throw std::invalid_argument("times and velocities must be finite");
    }
    if (!(row.sigma > 0.0)) {
      throw std::invalid_argument("sigma must be positive");
    }
  }
}

double solve_kepler(double mean_anomaly, double e) {
  if (!(e >= 0.0 && e < 1.0)) {
    throw std::domain_error("eccentricity out of range");
  }
  const double m = wrap_two_pi(mean_anomaly);
  constexpr double kTol = 1e-13;

  double eca = m + e * std::sin(m);
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    const double f = eca - e * std::sin(eca) - m;
    if (std::abs(f) < kTol) {
      converged = true;
      break;
    }
    eca -= f / (1.0 - e * std::cos(eca));
    if (eca < 0.0) eca = 0.0;
    if (eca > kTwoPi) eca = kTwoPi;
  }
  if (!converged) {
    // g(E) = E - e sin E is strictly increasing, so the root is bracketed.
    double lo = 0.0, hi = kTwoPi;
    for (int it = 0; it < 200; ++it) {
      eca = 0.5 * (lo + hi);
      const double f = eca - e * std::sin(eca) - m;
      if (std::abs(f) < kTol) break;
      if (f < 0.0) {
        lo = eca;
      } else {
        hi = eca;
      }
    }
  }
  if (eca >= kTwoPi) eca -= kTwoPi;
  return eca;
}

double true_anomaly(double eccentric_anomaly, double e) {
  if (!(e >= 0.0 && e < 1.0)) {
    throw std::domain_error("eccentricity out of range");
  }
  const double half = 0.5 * eccentric_anomaly;
  const double t = 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(half),
                                    std::sqrt(1.0 - e) * std::cos(half));
  return t < 0.0 ? t + kTwoPi : t;
}

double velocity_shift(double t, const PlanetParams& phi) {
  const double m = wrap_two_pi(kTwoPi / phi.P * t + phi.mu0);
  const double eca = solve_kepler(m, phi.e);
  const double ta = true_anomaly(eca, phi.e);
  return phi.K * (std::cos(phi.omega + ta) + phi.e * std::cos(phi.omega));
}

double model_velocity(double t, const RvModelParams& params) {
  double v = params.c_offset;
  for (const auto& planet : params.planets) v += velocity_shift(t, planet);
  return v;
}

double log_likelihood(const RvModelParams& params, const RvDataset& data) {
  constexpr double kLogTwoPi = 1.8378770664093454836;
  const double jitter_sq = params.jitter * params.jitter;
  double ln_l = 0.0;
  for (const auto& row : data.rows) {
    const double variance = row.sigma * row.sigma + jitter_sq;
    const double residual = row.v - model_velocity(row.t, params);
    ln_l += -0.5 * (kLogTwoPi + std::log(variance)) -
            residual * residual / (2.0 * variance);
  }
  return ln_l;
}

double bic(double ln_l_hat, int k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return -2.0 * ln_l_hat + static_cast<double>(k) *
                               std::log(static_cast<double>(n));
}

RvDataset generate_synthetic(const RvModelParams& params,
                             const std::vector<double>& times,
                             const std::vector<double>& sigmas,
                             std::uint64_t seed) {
  validate(params);
  if (times.size() != sigmas.size()) {
    throw std::invalid_argument("times and sigmas must have equal length");
  }
  Rng rng(seed);
  RvDataset data;
  data.rows.reserve(times.size());
  const double jitter_sq = params.jitter * params.jitter;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double sd = std::sqrt(sigmas[i] * sigmas[i] + jitter_sq);
    Observation row;
    row.t = times[i];
    row.v = model_velocity(times[i], params) + sd * rng.normal();
    row.sigma = sigmas[i];
    data.rows.push_back(row);
  }
  return data;
}

RvDataset load_rv_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw std::runtime_error("missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t_days,rv_mps,sigma_mps") {
    throw std::runtime_error("missing header");
  }
  RvDataset data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    Observation row;
    char c1 = 0, c2 = 0;
    if (!(ss >> row.t >> c1 >> row.v >> c2 >> row.sigma) || c1 != ',' ||
        c2 != ',') {
      throw std::runtime_error("malformed row " + std::to_string(line_no));
    }
    std::string rest;
    if (ss >> rest) {
      throw std::runtime_error("malformed row " + std::to_string(line_no));
    }
    if (!(row.sigma > 0.0) || !std::isfinite(row.t) || !std::isfinite(row.v)) {
      throw std::runtime_error("malformed row " + std::to_string(line_no));
    }
    data.rows.push_back(row);
  }
  if (data.rows.empty()) {
    throw std::runtime_error("data file has no observations");
  }
  return data;
}

void save_rv_csv(const std::string& path, const RvDataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open data file: " + path);
  out << "t_days,rv_mps,sigma_mps\n";
  char buf[160];
  for (const auto& row : data.rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", row.t, row.v,
                  row.sigma);
    out << buf;
  }
  if (!out) throw std::runtime_error("failed writing data file: " + path);
}

std::string params_to_json(const RvModelParams& params) {
  nlohmann::json j;
  j["c_offset"] = params.c_offset;
  j["jitter"] = params.jitter;
  j["planets"] = nlohmann::json::array();
  for (const auto& p : params.planets) {
    j["planets"].push_back({{"K", p.K},
                            {"P", p.P},
                            {"e", p.e},
                            {"omega", p.omega},
                            {"mu0", p.mu0}});
  }
  return j.dump(2);
}

RvModelParams params_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RvModelParams params;
  params.c_offset = j.at("c_offset").get<double>();
  params.jitter = j.at("jitter").get<double>();
  if (j.contains("planets")) {
    for (const auto& pj : j.at("planets")) {
      PlanetParams p;
      p.K = pj.at("K").get<double>();
      p.P = pj.at("P").get<double>();
      p.e = pj.at("e").get<double>();
      p.omega = pj.at("omega").get<double>();
      p.mu0 = pj.at("mu0").get<double>();
      params.planets.push_back(p);
    }
  }
  return params;
}

}  // namespace rseda::rv
