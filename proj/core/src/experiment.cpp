#include "strongsidon/experiment.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>

#include <json.hpp>

#include "strongsidon/analysis.hpp"
#include "strongsidon/random_sets.hpp"
#include "strongsidon/serialization.hpp"

namespace strongsidon {

namespace {

using nlohmann::ordered_json;

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

// dyadic slice check: |S inside (2^(i-1), 2^i]| <= 2 h^(1+1/h) 2^(i(1-alpha)/h)
ordered_json dyadic_checks(const std::vector<BigInt>& values,
                           const StrongParams& params) {
  ordered_json out = ordered_json::array();
  std::size_t pos = 0;
  BigInt hi = 1;
  int i = 0;
  while (pos < values.size()) {
    const std::size_t start = pos;
    while (pos < values.size() && values[pos] <= hi) ++pos;
    const std::size_t slice = pos - start;
    if (slice > 0) {
      const double bound = finite_upper_bound(hi, params.alpha, params.h);
      ordered_json row;
      row["i"] = i;
      row["size"] = slice;
      row["bound"] = bound;
      row["ok"] = static_cast<double>(slice) <= bound;
      out.push_back(std::move(row));
    }
    hi *= 2;
    ++i;
  }
  return out;
}

bool all_dyadic_ok(const ordered_json& checks) {
  for (const auto& row : checks)
    if (!row.at("ok").get<bool>()) return false;
  return true;
}

ordered_json formulas_json(const ExperimentConfig& config) {
  ordered_json f;
  f["optimal_c"] = optimal_c(config.params.alpha, config.params.h);
  f["finite_upper_bound_at_n_max"] = finite_upper_bound(
      BigInt(std::max<std::uint64_t>(config.n_max, 1)), config.params.alpha,
      config.params.h);
  f["infinite_upper_constant"] =
      infinite_upper_constant(config.params.alpha, config.params.h);
  f["random_exponent"] = random_exponent(config.delta, config.params.h);
  return f;
}

ordered_json counting_json(const std::vector<BigInt>& values,
                           CountingProfile& profile) {
  const BigInt limit = values.empty() ? BigInt(1) : values.back();
  profile = counting_function(values, geometric_checkpoints(limit));
  ordered_json out;
  out["fitted_exponent"] = profile.fitted_exponent;
  out["window_lo"] = to_dec(profile.window.first);
  out["window_hi"] = to_dec(profile.window.second);
  return out;
}

int finish(const ExperimentConfig& config, ordered_json& summary, int code) {
  summary["exit_code"] = code;
  if (config.emit_timestamp) summary["timestamp"] = iso_now();
  write_file(join(config.out_dir, "summary.json"), summary.dump(2) + "\n");
  return code;
}

int run_construct(const ExperimentConfig& config, ordered_json& summary) {
  const double c = config.resolve_c();
  const auto basis = basis_primes(config.k_max, config.params.h,
                                  config.basis_strategy, config.seed);
  const auto raw = build_set(c, config.params, basis, config.k_max,
                             config.f_log_base);
  const auto pre_violations = find_violations(raw);
  write_file(join(config.out_dir, "violations.jsonl"),
             violations_to_jsonl(pre_violations));
  const auto pruned = prune(raw);
  write_file(join(config.out_dir, "set.json"), set_to_json(pruned));

  const auto partition =
      prime_partition(c, config.k_max, config.f_log_base);
  write_file(join(config.out_dir, "partition.csv"),
             partition_to_csv(partition));
  write_file(join(config.out_dir, "pruning.csv"),
             pruning_to_csv(partition, pruned.pruned));

  const auto values = pruned.sorted_values();
  CountingProfile profile;
  summary["counting"] = counting_json(values, profile);
  write_file(join(config.out_dir, "counting.csv"), counting_to_csv(profile));
  summary["c"] = c;
  summary["set_size"] = values.size();
  summary["pre_prune_violations"] = pre_violations.size();
  summary["pruned_primes"] = pruned.pruned.size();
  const auto dyadic = dyadic_checks(values, config.params);
  summary["dyadic_ok"] = all_dyadic_ok(dyadic);
  summary["dyadic"] = dyadic;

  const auto residual = check_strong_bh(values, config.params,
                                        config.mem_budget);
  summary["post_prune_violations"] = residual.size();
  return finish(config, summary, residual.empty() ? kExitOk : kExitViolated);
}

int run_greedy(const ExperimentConfig& config, ordered_json& summary) {
  const auto set = greedy_strong_bh(config.params, config.n_max);
  write_file(join(config.out_dir, "set.json"), set_to_json(set));
  const auto values = set.sorted_values();
  CountingProfile profile;
  summary["counting"] = counting_json(values, profile);
  write_file(join(config.out_dir, "counting.csv"), counting_to_csv(profile));
  summary["set_size"] = values.size();
  const auto dyadic = dyadic_checks(values, config.params);
  summary["dyadic_ok"] = all_dyadic_ok(dyadic);
  summary["dyadic"] = dyadic;
  return finish(config, summary,
                all_dyadic_ok(dyadic) ? kExitOk : kExitViolated);
}

int run_verify(const ExperimentConfig& config, ordered_json& summary) {
  if (config.in_path.empty())
    throw InvalidConfig("verify: --in set JSON required");
  const auto set = set_from_json(read_file(config.in_path));
  const auto values = set.sorted_values();
  const auto violations =
      check_strong_bh(values, config.params, config.mem_budget);
  write_file(join(config.out_dir, "violations.jsonl"),
             violations_to_jsonl(violations));
  summary["set_size"] = values.size();
  summary["violations"] = violations.size();
  return finish(config, summary,
                violations.empty() ? kExitOk : kExitViolated);
}

int run_random_transfer(const ExperimentConfig& config,
                        ordered_json& summary) {
  StrongParams params = config.params;
  params.alpha = 1.0 - config.delta;
  params.gamma = 2.0 * params.h * std::exp2(1.0 + 1.0 / config.delta);
  summary["alpha"] = params.alpha;
  summary["gamma"] = params.gamma;

  const auto strong = greedy_strong_bh(params, config.n_max);
  write_file(join(config.out_dir, "set.json"), set_to_json(strong));
  const auto sample = sample_r_delta(config.delta, config.n_max, config.seed);
  write_file(join(config.out_dir, "sample.json"), sample_to_json(sample));

  const auto transferred = transfer(strong, sample);
  ConstructedSet out_set;
  out_set.params = {params.h, 0.0, 1.0};
  out_set.provenance = Provenance::external;
  std::vector<BigInt> values;
  for (std::uint64_t m : transferred) {
    DigitElement elem;
    elem.value = BigInt(m);
    out_set.elements.emplace(m, std::move(elem));
    values.emplace_back(m);
  }
  write_file(join(config.out_dir, "transferred.json"),
             set_to_json(out_set));

  const auto violations = check_strong_bh(values, out_set.params,
                                          config.mem_budget);
  summary["strong_size"] = strong.elements.size();
  summary["sample_size"] = sample.members.size();
  summary["transferred_size"] = transferred.size();
  summary["bh_violations"] = violations.size();
  return finish(config, summary,
                violations.empty() ? kExitOk : kExitViolated);
}

int run_partition(const ExperimentConfig& config, ordered_json& summary) {
  const double c = config.resolve_c();
  const auto partition =
      prime_partition(c, config.k_max, config.f_log_base);
  write_file(join(config.out_dir, "partition.csv"),
             partition_to_csv(partition));
  summary["c"] = c;
  summary["cap"] = partition.cap;
  ordered_json sizes;
  for (const auto& [k, part] : partition.parts)
    sizes[std::to_string(k)] = part.primes.size();
  summary["part_sizes"] = std::move(sizes);
  return finish(config, summary, kExitOk);
}

int run_analyze(const ExperimentConfig& config, ordered_json& summary) {
  if (config.in_path.empty())
    throw InvalidConfig("analyze: --in set JSON required");
  const auto set = set_from_json(read_file(config.in_path));
  const auto values = set.sorted_values();
  CountingProfile profile;
  summary["counting"] = counting_json(values, profile);
  write_file(join(config.out_dir, "counting.csv"), counting_to_csv(profile));
  summary["set_size"] = values.size();
  const auto dyadic = dyadic_checks(values, config.params);
  summary["dyadic_ok"] = all_dyadic_ok(dyadic);
  summary["dyadic"] = dyadic;
  return finish(config, summary, kExitOk);
}

void write_error(const ExperimentConfig& config, const std::string& kind,
                 const std::string& message) {
  ordered_json err;
  err["error"] = kind;
  err["message"] = message;
  try {
    write_file(join(config.out_dir, "error.json"), err.dump(2) + "\n");
  } catch (...) {
    // out_dir itself may be the problem; the exit code still reports it
  }
}

}  // namespace

Mode mode_from_name(const std::string& name) {
  if (name == "construct") return Mode::construct;
  if (name == "greedy") return Mode::greedy;
  if (name == "verify") return Mode::verify;
  if (name == "random-transfer") return Mode::random_transfer;
  if (name == "partition") return Mode::partition;
  if (name == "analyze") return Mode::analyze;
  throw InvalidConfig("unknown mode: " + name);
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::construct:
      return "construct";
    case Mode::greedy:
      return "greedy";
    case Mode::verify:
      return "verify";
    case Mode::random_transfer:
      return "random-transfer";
    case Mode::partition:
      return "partition";
    case Mode::analyze:
      return "analyze";
  }
  return "construct";
}

double ExperimentConfig::resolve_c() const {
  if (c == "optimal") return optimal_c(params.alpha, params.h);
  try {
    std::size_t pos = 0;
    const double value = std::stod(c, &pos);
    if (pos != c.size()) throw InvalidConfig("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw InvalidConfig("--c must be a number or \"optimal\": " + c);
  }
}

int run_experiment(const ExperimentConfig& config) {
  ordered_json summary;
  summary["mode"] = mode_name(config.mode);
  summary["h"] = config.params.h;
  summary["alpha"] = config.params.alpha;
  summary["gamma"] = config.params.gamma;
  summary["seed"] = config.seed;
  summary["formulas"] = formulas_json(config);

  try {
    std::filesystem::create_directories(config.out_dir);
    switch (config.mode) {
      case Mode::construct:
        return run_construct(config, summary);
      case Mode::greedy:
        return run_greedy(config, summary);
      case Mode::verify:
        return run_verify(config, summary);
      case Mode::random_transfer:
        return run_random_transfer(config, summary);
      case Mode::partition:
        return run_partition(config, summary);
      case Mode::analyze:
        return run_analyze(config, summary);
    }
    return kExitInvalidConfig;
  } catch (const TooLarge& e) {
    write_error(config, "resource", e.what());
    return kExitResource;
  } catch (const InvalidConfig& e) {
    write_error(config, "invalid_config", e.what());
    return kExitInvalidConfig;
  } catch (const Error& e) {
    write_error(config, "error", e.what());
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    write_error(config, "error", e.what());
    return kExitInvalidConfig;
  }
}

}  // namespace strongsidon
