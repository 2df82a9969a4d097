#include "rseda/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rseda/rsf7.hpp"
#include "rseda/rv.hpp"
#include "rseda/rvfit.hpp"

namespace rseda::cli {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json load_config_json(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

template <typename T>
void maybe_set(const nlohmann::json& section, const char* key, T& field) {
  if (section.contains(key)) field = section.at(key).get<T>();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

void write_metadata(const fs::path& dir, const std::string& command,
                    const nlohmann::json& settings) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["tool_version"] = kToolVersion;
  meta["settings"] = settings;
  meta["config_hash"] = config_hash(settings.dump());
  if (settings.contains("seed")) meta["seed"] = settings.at("seed");
  write_text_file((dir / "run_metadata.json").string(), meta.dump(2) + "\n");
}

nlohmann::json rseda_settings(const RsEdaConfig& c) {
  return {{"n_init", c.n_init},
          {"init_keep_fraction", c.init_keep_fraction},
          {"r_per_dim", c.r_per_dim},
          {"select_fraction", c.select_fraction},
          {"inner_patience", c.inner_patience},
          {"outer_patience", c.outer_patience},
          {"max_evaluations", c.max_evaluations},
          {"improvement_tolerance", c.improvement_tolerance},
          {"covariance_floor", c.covariance_floor}};
}

nlohmann::json emna_settings(const EmnaConfig& c) {
  return {{"population_size", c.population_size},
          {"select_fraction", c.select_fraction},
          {"max_evaluations", c.max_evaluations},
          {"improvement_tolerance", c.improvement_tolerance},
          {"patience", c.patience},
          {"covariance_floor", c.covariance_floor}};
}

}  // namespace

std::string config_hash(const std::string& canonical_settings) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canonical_settings) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

RsEdaConfig resolve_rseda_config(const std::string& config_path) {
  RsEdaConfig config;
  const nlohmann::json file = load_config_json(config_path);
  if (file.contains("rseda")) {
    const auto& s = file.at("rseda");
    maybe_set(s, "n_init", config.n_init);
    maybe_set(s, "init_keep_fraction", config.init_keep_fraction);
    maybe_set(s, "r_per_dim", config.r_per_dim);
    maybe_set(s, "select_fraction", config.select_fraction);
    maybe_set(s, "inner_patience", config.inner_patience);
    maybe_set(s, "outer_patience", config.outer_patience);
    maybe_set(s, "max_evaluations", config.max_evaluations);
    maybe_set(s, "improvement_tolerance", config.improvement_tolerance);
    maybe_set(s, "covariance_floor", config.covariance_floor);
    maybe_set(s, "seed", config.seed);
  }
  return config;
}

EmnaConfig resolve_emna_config(const std::string& config_path) {
  EmnaConfig config;
  config.population_size = 20000;
  const nlohmann::json file = load_config_json(config_path);
  if (file.contains("emna")) {
    const auto& s = file.at("emna");
    maybe_set(s, "population_size", config.population_size);
    maybe_set(s, "select_fraction", config.select_fraction);
    maybe_set(s, "max_evaluations", config.max_evaluations);
    maybe_set(s, "improvement_tolerance", config.improvement_tolerance);
    maybe_set(s, "patience", config.patience);
    maybe_set(s, "covariance_floor", config.covariance_floor);
    maybe_set(s, "seed", config.seed);
  }
  return config;
}

int cmd_bench(const BenchOptions& options) {
  for (const auto& alg : options.algorithms) {
    if (alg != "rs-eda" && alg != "emna") {
      std::cerr << "unknown algorithm: " << alg << "\n";
      return kExitUsageError;
    }
  }
  if (options.dimension < 2) {
    std::cerr << "bench requires --dim >= 2\n";
    return kExitUsageError;
  }
  if (options.repetitions < 1) {
    std::cerr << "bench requires --reps >= 1\n";
    return kExitUsageError;
  }

  try {
    RsEdaConfig rs_config = resolve_rseda_config(options.config_path);
    EmnaConfig emna_config = resolve_emna_config(options.config_path);
    rs_config.max_evaluations = options.budget;
    emna_config.max_evaluations = options.budget;
    if (options.n_init) rs_config.n_init = *options.n_init;
    if (options.emna_population) {
      emna_config.population_size = *options.emna_population;
    }

    fs::create_directories(options.output_dir);
    const fs::path out_dir(options.output_dir);

    const Rsf7Instance instance =
        make_instance(options.dimension, options.seed);
    save_instance((out_dir / "instance.json").string(), instance);

    std::ostringstream summary;
    summary << "algorithm,seed,final_best,evals_used,wall_seconds\n";

    const Bounds bounds = rsf7_bounds(options.dimension);
    for (const auto& alg : options.algorithms) {
      for (int rep = 0; rep < options.repetitions; ++rep) {
        const std::uint64_t run_seed =
            options.seed + static_cast<std::uint64_t>(rep);
        Objective objective(bounds.dimension(),
                            [&instance](const std::vector<double>& theta) {
                              return rsf7_g(theta, instance);
                            });
        const auto t0 = std::chrono::steady_clock::now();
        RunResult result;
        if (alg == "rs-eda") {
          RsEdaConfig c = rs_config;
          c.seed = run_seed;
          result = optimize(objective, bounds, c);
        } else {
          EmnaConfig c = emna_config;
          c.seed = run_seed;
          result = emna_optimize(objective, bounds, c);
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();

        std::ostringstream trace_name;
        trace_name << "trace_" << alg << "_rep" << rep << ".csv";
        write_trace_csv((out_dir / trace_name.str()).string(), result.trace);

        summary << alg << ',' << run_seed << ','
                << format_double(result.best.fitness) << ','
                << result.evaluations_used << ',' << format_double(wall)
                << '\n';
      }
    }
    write_text_file((out_dir / "summary.csv").string(), summary.str());

    nlohmann::json settings;
    settings["dimension"] = options.dimension;
    settings["seed"] = options.seed;
    settings["budget"] = options.budget;
    settings["repetitions"] = options.repetitions;
    settings["algorithms"] = options.algorithms;
    settings["rseda"] = rseda_settings(rs_config);
    settings["emna"] = emna_settings(emna_config);
    write_metadata(out_dir, "bench", settings);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

int cmd_fit(const FitOptions& options) {
  if (options.j_max < 0) {
    std::cerr << "fit requires --jmax >= 0\n";
    return kExitUsageError;
  }
  try {
    const rv::RvDataset data = rv::load_rv_csv(options.data_path);

    RsEdaConfig config = resolve_rseda_config(options.config_path);
    if (config.max_evaluations == 0) config.max_evaluations = 200000;
    if (options.budget) config.max_evaluations = *options.budget;
    if (options.seed) config.seed = *options.seed;

    const rv::ModelSelectionReport report =
        rv::select_model(data, options.j_max, config);

    const fs::path report_path(options.output_path);
    const fs::path out_dir = report_path.has_parent_path()
                                 ? report_path.parent_path()
                                 : fs::path(".");
    fs::create_directories(out_dir);
    rv::write_report(report_path.string(), report);

    // Dense model curves for external plotting.
    double t_min = data.rows.front().t;
    double t_max = data.rows.front().t;
    for (const auto& row : data.rows) {
      t_min = std::min(t_min, row.t);
      t_max = std::max(t_max, row.t);
    }
    constexpr int kCurvePoints = 500;
    for (const auto& record : report.models) {
      if (!record.available) continue;
      std::ostringstream curve;
      curve << "t_days,rv_model_mps\n";
      for (int i = 0; i < kCurvePoints; ++i) {
        const double t =
            t_min + (t_max - t_min) * static_cast<double>(i) /
                        static_cast<double>(kCurvePoints - 1);
        curve << format_double(t) << ','
              << format_double(rv::model_velocity(t, record.params)) << '\n';
      }
      std::ostringstream name;
      name << "curve_m" << record.j << ".csv";
      write_text_file((out_dir / name.str()).string(), curve.str());
    }

    std::printf("%4s %4s %6s %14s %14s\n", "j", "k", "n", "lnL", "BIC");
    for (const auto& record : report.models) {
      if (record.available) {
        std::printf("%4d %4d %6zu %14.4f %14.4f\n", record.j, record.k,
                    record.n, record.ln_l, record.bic);
      } else {
        std::printf("%4d %4d %6zu %14s %14s\n", record.j, record.k, record.n,
                    "failed", "-");
      }
    }
    std::printf("selected: j=%d\n", report.selected_j);

    nlohmann::json settings;
    settings["data_path"] = options.data_path;
    settings["j_max"] = options.j_max;
    settings["seed"] = config.seed;
    settings["rseda"] = rseda_settings(config);
    write_metadata(out_dir, "fit", settings);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

int cmd_synth(const SynthOptions& options) {
  double t_start = 0.0, t_end = 0.0;
  int count = 0;
  {
    std::istringstream ss(options.times_spec);
    char c1 = 0, c2 = 0;
    if (!(ss >> t_start >> c1 >> t_end >> c2 >> count) || c1 != ':' ||
        c2 != ':' || count < 1 || t_end < t_start) {
      std::cerr << "invalid --times spec (expected start:end:count)\n";
      return kExitUsageError;
    }
  }
  if (!(options.sigma > 0.0)) {
    std::cerr << "sigma must be positive\n";
    return kExitUsageError;
  }

  try {
    std::ifstream in(options.params_path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open params file: " +
                               options.params_path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    const rv::RvModelParams params = rv::params_from_json(ss.str());
    rv::validate(params);

    std::vector<double> times(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      times[static_cast<std::size_t>(i)] =
          count == 1 ? t_start
                     : t_start + (t_end - t_start) * static_cast<double>(i) /
                                     static_cast<double>(count - 1);
    }
    const std::vector<double> sigmas(static_cast<std::size_t>(count),
                                     options.sigma);
    const rv::RvDataset data =
        rv::generate_synthetic(params, times, sigmas, options.seed);

    const fs::path out_path(options.output_path);
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    rv::save_rv_csv(options.output_path, data);

    nlohmann::json settings;
    settings["params_path"] = options.params_path;
    settings["times"] = options.times_spec;
    settings["sigma"] = options.sigma;
    settings["seed"] = options.seed;
    write_metadata(out_path.has_parent_path() ? out_path.parent_path()
                                              : fs::path("."),
                   "synth", settings);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace rseda::cli
