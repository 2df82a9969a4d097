#include "rseda/rvfit.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace rseda::rv {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
constexpr double kMaxVelocity = 2128.0;       // m/s
constexpr double kMaxPeriodDays = 365250.0;   // 1000 Julian years
constexpr double kMaxEccentricity = 0.99;

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  return y;
}

}  // namespace

Bounds rv_bounds(int j) {
  if (j < 0) throw std::invalid_argument("planet count must be non-negative");
  std::vector<double> lo{-kMaxVelocity, 1.0};
  std::vector<double> hi{kMaxVelocity, kMaxVelocity};
  std::vector<Scale> scales{Scale::linear, Scale::log};
  for (int a = 0; a < j; ++a) {
    lo.insert(lo.end(), {1.0, 1.0, 0.0, 0.0, 0.0});
    hi.insert(hi.end(), {kMaxVelocity, kMaxPeriodDays, kMaxEccentricity,
                         kTwoPi, kTwoPi});
    scales.insert(scales.end(), {Scale::log, Scale::log, Scale::linear,
                                 Scale::circular, Scale::circular});
  }
  return Bounds(std::move(lo), std::move(hi), std::move(scales));
}

std::vector<double> encode_params(const RvModelParams& params) {
  std::vector<double> theta{params.c_offset, params.jitter};
  for (const auto& p : params.planets) {
    theta.insert(theta.end(), {p.K, p.P, p.e, p.omega, p.mu0});
  }
  return theta;
}

RvModelParams decode_params(const std::vector<double>& theta) {
  if (theta.size() < 2 || (theta.size() - 2) % 5 != 0) {
    throw std::invalid_argument("parameter vector has invalid dimension");
  }
  RvModelParams params;
  params.c_offset = theta[0];
  params.jitter = theta[1];
  const std::size_t j = (theta.size() - 2) / 5;
  for (std::size_t a = 0; a < j; ++a) {
    PlanetParams p;
    p.K = theta[2 + 5 * a];
    p.P = theta[3 + 5 * a];
    p.e = theta[4 + 5 * a];
    p.omega = wrap_two_pi(theta[5 + 5 * a]);
    p.mu0 = wrap_two_pi(theta[6 + 5 * a]);
    params.planets.push_back(p);
  }
  return params;
}

FitResult fit_model(const RvDataset& data, int j, const RsEdaConfig& config) {
  validate(data);
  const Bounds bounds = rv_bounds(j);
  Objective objective(bounds.dimension(),
                      [&data](const std::vector<double>& theta) {
                        return log_likelihood(decode_params(theta), data);
                      });
  FitResult result;
  result.run = optimize(objective, bounds, config);
  result.params = decode_params(result.run.best.params);
  result.ln_l = result.run.best.fitness;
  return result;
}

ModelSelectionReport select_model(const RvDataset& data, int j_max,
                                  const RsEdaConfig& config) {
  if (j_max < 0) throw std::invalid_argument("j_max must be non-negative");
  validate(data);
  ModelSelectionReport report;
  double best_bic = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= j_max; ++j) {
    ModelRecord record;
    record.j = j;
    record.k = 2 + 5 * j;
    record.n = data.size();
    RsEdaConfig model_config = config;
    model_config.seed = config.seed + 1000003ULL * static_cast<std::uint64_t>(j);
    try {
      FitResult fit = fit_model(data, j, model_config);
      record.ln_l = fit.ln_l;
      record.bic = bic(fit.ln_l, record.k, record.n);
      record.params = std::move(fit.params);
      record.available = true;
    } catch (const std::exception&) {
      record.available = false;
    }
    if (record.available && record.bic < best_bic) {
      best_bic = record.bic;
      report.selected_j = j;
    }
    report.models.push_back(std::move(record));
  }
  return report;
}

std::string report_to_json(const ModelSelectionReport& report) {
  nlohmann::json j;
  j["models"] = nlohmann::json::array();
  for (const auto& record : report.models) {
    nlohmann::json mj;
    mj["j"] = record.j;
    mj["k"] = record.k;
    mj["n"] = record.n;
    mj["available"] = record.available;
    if (record.available) {
      mj["ln_l"] = record.ln_l;
      mj["bic"] = record.bic;
      mj["params"] = nlohmann::json::parse(params_to_json(record.params));
    }
    j["models"].push_back(std::move(mj));
  }
  j["selected_j"] = report.selected_j;
  return j.dump(2);
}

void write_report(const std::string& path,
                  const ModelSelectionReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << report_to_json(report) << '\n';
  if (!out) throw std::runtime_error("failed writing report file: " + path);
}

}  // namespace rseda::rv
