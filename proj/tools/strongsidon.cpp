#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "strongsidon/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"strong B_h set construction, verification and analysis"};
  app.set_help_flag("--help", "print usage");  // frees -h for the fold count

  std::string mode = "construct";
  app.add_option("--mode", mode, "pipeline to run")
      ->check(CLI::IsMember({"construct", "greedy", "verify",
                             "random-transfer", "partition", "analyze"}));

  strongsidon::ExperimentConfig config;
  app.add_option("--h", config.params.h, "fold count h >= 2");
  app.add_option("--alpha", config.params.alpha, "strength exponent in [0,1)");
  app.add_option("--gamma", config.params.gamma, "separation factor >= 1");
  app.add_option("--c", config.c, "growth parameter, number or 'optimal'");
  app.add_option("--k-max", config.k_max, "largest element length");
  app.add_option("--n-max", config.n_max, "scan / sample limit");
  app.add_option("--delta", config.delta, "random-set density exponent");
  app.add_option("--seed", config.seed, "RNG seed");
  std::string basis = "smallest";
  app.add_option("--basis", basis, "basis prime selection")
      ->check(CLI::IsMember({"smallest", "random"}));
  std::string f_log_base = "e";
  app.add_option("--f-log-base", f_log_base,
                 "log base in the partition correction term")
      ->check(CLI::IsMember({"e", "2", "10"}));
  app.add_option("--out", config.out_dir, "output directory");
  app.add_option("--in", config.in_path, "input set JSON (verify/analyze)");
  app.add_option("--mem-budget", config.mem_budget,
                 "sum-table memory budget in bytes");

  try {
    app.parse(argc, argv);
    config.mode = strongsidon::mode_from_name(mode);
    config.basis_strategy = basis == "random"
                                ? strongsidon::BasisStrategy::uniform_random
                                : strongsidon::BasisStrategy::smallest;
    config.f_log_base = f_log_base == "2"    ? strongsidon::LogBase::two
                        : f_log_base == "10" ? strongsidon::LogBase::ten
                                             : strongsidon::LogBase::e;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : strongsidon::kExitInvalidConfig;
  } catch (const strongsidon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return strongsidon::kExitInvalidConfig;
  }

  const int code = strongsidon::run_experiment(config);
  if (code != strongsidon::kExitOk)
    std::cerr << "exit code " << code << "; see " << config.out_dir
              << " for details\n";
  return code;
}
