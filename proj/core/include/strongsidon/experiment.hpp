#pragma once

#include <cstdint>
#include <string>

#include "strongsidon/construction.hpp"
#include "strongsidon/prime_tools.hpp"
#include "strongsidon/verification.hpp"

namespace strongsidon {

enum class Mode { construct, greedy, verify, random_transfer, partition,
                  analyze };

Mode mode_from_name(const std::string& name);
std::string mode_name(Mode mode);

struct ExperimentConfig {
  Mode mode = Mode::construct;
  StrongParams params;
  std::string c = "optimal";  // decimal value or "optimal"
  int k_max = 6;
  std::uint64_t n_max = 100;
  double delta = 0.5;
  std::uint64_t seed = 0;
  BasisStrategy basis_strategy = BasisStrategy::smallest;
  LogBase f_log_base = LogBase::e;
  std::string out_dir = ".";
  std::string in_path;  // set JSON input for verify/analyze
  std::size_t mem_budget = kDefaultMemBudget;
  bool emit_timestamp = true;

  double resolve_c() const;  // throws InvalidConfig on a bad value
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitResource = 3;

/// Runs the selected pipeline and writes its artifacts (set JSON,
/// violations JSONL, counting CSV, summary JSON) under out_dir. Returns an
/// exit code; failures also leave an error.json behind.
int run_experiment(const ExperimentConfig& config);

}  // namespace strongsidon
