#ifndef RSEDA_COMMANDS_HPP
#define RSEDA_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rseda/emna.hpp"
#include "rseda/rseda.hpp"

namespace rseda::cli {

inline constexpr const char* kToolVersion = "rseda 0.1.0";

/// Exit code contract shared by all commands:
/// 0 success, 1 I/O or data error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

struct BenchOptions {
  int dimension = 5;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000000;
  int repetitions = 1;
  std::vector<std::string> algorithms = {"rs-eda", "emna"};
  std::string output_dir = "bench_out";
  std::string config_path;
  std::optional<std::uint64_t> n_init;          // flag override
  std::optional<std::uint64_t> emna_population; // flag override
};

struct FitOptions {
  std::string data_path;
  int j_max = 2;
  std::string config_path;
  std::string output_path = "report.json";
  std::optional<std::uint64_t> budget;  // flag override
  std::optional<std::uint64_t> seed;    // flag override
};

struct SynthOptions {
  std::string params_path;
  std::string times_spec = "0:200:30";  // start:end:count, inclusive
  double sigma = 2.0;
  std::uint64_t seed = 1;
  std::string output_path = "synthetic.csv";
};

/// Generate the RSF7 instance for (dimension, seed), run each requested
/// algorithm for the given repetitions (seed + rep_index per run), write one
/// trace CSV per run, a summary CSV, the serialized instance, and a
/// metadata record.
int cmd_bench(const BenchOptions& options);

/// Fit models j = 0..j_max to the dataset, write the JSON report and one
/// fitted-curve CSV per model, and print a BIC table to stdout.
int cmd_fit(const FitOptions& options);

/// Write a synthetic dataset CSV from a JSON parameter file.
int cmd_synth(const SynthOptions& options);

/// Effective optimizer configs: built-in defaults, overlaid by the optional
/// JSON config file ("rseda" / "emna" sections), overlaid by explicit flags.
RsEdaConfig resolve_rseda_config(const std::string& config_path);
EmnaConfig resolve_emna_config(const std::string& config_path);

/// FNV-1a hash of a canonical settings dump, hex-encoded.
std::string config_hash(const std::string& canonical_settings);

}  // namespace rseda::cli

#endif  // RSEDA_COMMANDS_HPP
