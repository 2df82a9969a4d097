#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rseda/commands.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s) {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-subspace EDA optimization toolkit"};
  app.require_subcommand(1);

  rseda::cli::BenchOptions bench;
  std::string bench_algs = "rs-eda,emna";
  std::uint64_t bench_n_init = 0;
  std::uint64_t bench_pop = 0;
  auto* bench_cmd =
      app.add_subcommand("bench", "Run optimizers on an RSF7 instance");
  bench_cmd->add_option("--dim", bench.dimension, "Problem dimension");
  bench_cmd->add_option("--seed", bench.seed, "Instance/base run seed");
  bench_cmd->add_option("--budget", bench.budget, "Evaluation budget per run");
  bench_cmd->add_option("--reps", bench.repetitions, "Repetitions per algorithm");
  bench_cmd->add_option("--algs", bench_algs,
                        "Comma-separated algorithms (rs-eda,emna)");
  bench_cmd->add_option("--out", bench.output_dir, "Output directory");
  bench_cmd->add_option("--config", bench.config_path, "JSON config file");
  auto* opt_n_init =
      bench_cmd->add_option("--n-init", bench_n_init, "RS-EDA init sample count");
  auto* opt_pop =
      bench_cmd->add_option("--pop", bench_pop, "EMNA population size");

  rseda::cli::FitOptions fit;
  std::uint64_t fit_budget = 0;
  std::uint64_t fit_seed = 0;
  auto* fit_cmd =
      app.add_subcommand("fit", "Fit planet models to a radial-velocity CSV");
  fit_cmd->add_option("--data", fit.data_path, "Input CSV")->required();
  fit_cmd->add_option("--jmax", fit.j_max, "Largest planet count to fit");
  fit_cmd->add_option("--config", fit.config_path, "JSON config file");
  fit_cmd->add_option("--out", fit.output_path, "Report JSON path");
  auto* opt_fit_budget =
      fit_cmd->add_option("--budget", fit_budget, "Evaluation budget per model");
  auto* opt_fit_seed = fit_cmd->add_option("--seed", fit_seed, "Base seed");

  rseda::cli::SynthOptions synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic radial-velocity CSV");
  synth_cmd->add_option("--params", synth.params_path, "Model params JSON")
      ->required();
  synth_cmd->add_option("--times", synth.times_spec,
                        "Epoch grid start:end:count");
  synth_cmd->add_option("--sigma", synth.sigma, "Per-point error, m/s");
  synth_cmd->add_option("--seed", synth.seed, "Noise seed");
  synth_cmd->add_option("--out", synth.output_path, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rseda::cli::kExitUsageError;
  }

  if (bench_cmd->parsed()) {
    bench.algorithms = split_csv(bench_algs);
    if (opt_n_init->count() > 0) bench.n_init = bench_n_init;
    if (opt_pop->count() > 0) bench.emna_population = bench_pop;
    return rseda::cli::cmd_bench(bench);
  }
  if (fit_cmd->parsed()) {
    if (opt_fit_budget->count() > 0) fit.budget = fit_budget;
    if (opt_fit_seed->count() > 0) fit.seed = fit_seed;
    return rseda::cli::cmd_fit(fit);
  }
  if (synth_cmd->parsed()) {
    return rseda::cli::cmd_synth(synth);
  }
  return rseda::cli::kExitUsageError;
}
