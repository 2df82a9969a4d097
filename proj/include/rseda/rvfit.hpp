#ifndef RSEDA_RVFIT_HPP
#define RSEDA_RVFIT_HPP

#include <string>
#include <vector>

#include "rseda/core.hpp"
#include "rseda/rseda.hpp"
#include "rseda/rv.hpp"

namespace rseda::rv {

/// Search box for a j-planet model in the packed parameter order
/// (c_offset, jitter, then per planet K, P, e, omega, mu0).
/// Jitter, K and P are log-scaled; angles are circular on [0, 2pi).
Bounds rv_bounds(int j);

std::vector<double> encode_params(const RvModelParams& params);
RvModelParams decode_params(const std::vector<double>& theta);

struct FitResult {
  RvModelParams params;
  double ln_l = 0.0;
  RunResult run;
};

/// Maximum-likelihood fit of the j-planet model by RS-EDA over rv_bounds(j).
FitResult fit_model(const RvDataset& data, int j, const RsEdaConfig& config);

struct ModelRecord {
  int j = 0;
  int k = 0;           // 2 + 5j free parameters
  std::size_t n = 0;   // observation count
  double ln_l = 0.0;
  double bic = 0.0;
  RvModelParams params;
  bool available = false;  // false if the fit failed
};

struct ModelSelectionReport {
  std::vector<ModelRecord> models;
  int selected_j = -1;  // lowest BIC among available models
};

/// Fit every model j = 0..j_max and rank by BIC. A failed fit marks its
/// record unavailable instead of aborting the report. Each model uses a
/// seed derived deterministically from config.seed.
ModelSelectionReport select_model(const RvDataset& data, int j_max,
                                  const RsEdaConfig& config);

std::string report_to_json(const ModelSelectionReport& report);
void write_report(const std::string& path, const ModelSelectionReport& report);

}  // namespace rseda::rv

#endif  // RSEDA_RVFIT_HPP
