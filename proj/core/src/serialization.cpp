#include "strongsidon/serialization.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace strongsidon {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const BigInt kExactDoubleMax = BigInt(1) << 53;

ordered_json big_to_json(const BigInt& v) {
  if (v <= kExactDoubleMax && v >= -kExactDoubleMax)
    return ordered_json(static_cast<std::int64_t>(v.get_si()));
  return ordered_json(to_dec(v));
}

ordered_json u64_to_json(std::uint64_t v) {
  if (v <= (1ull << 53)) return ordered_json(v);
  return ordered_json(std::to_string(v));
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return from_dec(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    BigInt out;
    mpz_set_si(out.get_mpz_t(), v);
    return out;
  }
  throw Error("json: expected integer or decimal string");
}

std::uint64_t u64_from_json(const json& j) {
  if (j.is_string()) return std::stoull(j.get<std::string>());
  return j.get<std::uint64_t>();
}

std::string log_base_name(LogBase base) {
  switch (base) {
    case LogBase::e:
      return "e";
    case LogBase::two:
      return "2";
    case LogBase::ten:
      return "10";
  }
  return "e";
}

LogBase log_base_from_name(const std::string& name) {
  if (name == "e") return LogBase::e;
  if (name == "2") return LogBase::two;
  if (name == "10") return LogBase::ten;
  throw InvalidConfig("unknown f-log-base: " + name);
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string set_to_json(const ConstructedSet& set) {
  ordered_json j;
  j["h"] = set.params.h;
  j["alpha"] = set.params.alpha;
  j["gamma"] = set.params.gamma;
  j["c"] = set.c;
  ordered_json basis;
  basis["h"] = set.basis.h;
  basis["q_primes"] = set.basis.base_primes;
  basis["prim_roots"] = set.basis.prim_roots;
  basis["strategy"] = set.basis.strategy;
  basis["seed"] = set.basis.seed;
  j["basis"] = std::move(basis);
  j["provenance"] = provenance_name(set.provenance);
  j["f_log_base"] = log_base_name(set.f_log_base);

  ordered_json elements = ordered_json::array();
  ordered_json keys = ordered_json::array();
  ordered_json digits = ordered_json::array();
  bool any_digits = false;
  // elements emitted in key order (ascending primes / values)
  for (const auto& [key, elem] : set.elements) {
    elements.push_back(big_to_json(elem.value));
    keys.push_back(u64_to_json(key));
    ordered_json dv = ordered_json::array();
    for (std::uint64_t d : elem.digits) dv.push_back(u64_to_json(d));
    if (!elem.digits.empty()) any_digits = true;
    digits.push_back(std::move(dv));
  }
  j["elements"] = std::move(elements);
  j["element_keys"] = std::move(keys);
  if (any_digits) j["element_digits"] = std::move(digits);
  ordered_json pruned = ordered_json::array();
  for (std::uint64_t p : set.pruned) pruned.push_back(u64_to_json(p));
  j["pruned"] = std::move(pruned);
  ordered_json skipped = ordered_json::array();
  for (std::uint64_t p : set.skipped) skipped.push_back(u64_to_json(p));
  j["skipped"] = std::move(skipped);
  return j.dump(2) + "\n";
}

ConstructedSet set_from_json(const std::string& text) {
  const json j = json::parse(text);
  ConstructedSet set;
  set.params.h = j.value("h", 2);
  set.params.alpha = j.value("alpha", 0.0);
  set.params.gamma = j.value("gamma", 1.0);
  set.c = j.value("c", 0.0);
  if (j.contains("basis")) {
    const json& b = j["basis"];
    set.basis.h = b.value("h", set.params.h);
    if (b.contains("q_primes"))
      set.basis.base_primes =
          b["q_primes"].get<std::vector<std::uint64_t>>();
    if (b.contains("prim_roots"))
      set.basis.prim_roots =
          b["prim_roots"].get<std::vector<std::uint64_t>>();
    set.basis.strategy = b.value("strategy", std::string("smallest"));
    set.basis.seed = b.value("seed", std::uint64_t(0));
  } else {
    set.basis.h = set.params.h;
  }
  set.provenance =
      provenance_from_name(j.value("provenance", std::string("external")));
  set.f_log_base = log_base_from_name(j.value("f_log_base", std::string("e")));

  const json elements = j.value("elements", json::array());
  const json keys = j.value("element_keys", json::array());
  const json digit_arrays = j.value("element_digits", json::array());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    DigitElement elem;
    elem.value = big_from_json(elements[i]);
    if (i < digit_arrays.size())
      for (const json& d : digit_arrays[i])
        elem.digits.push_back(u64_from_json(d));
    const std::uint64_t key = i < keys.size()
                                  ? u64_from_json(keys[i])
                                  : static_cast<std::uint64_t>(
                                        elem.value.get_ui());
    set.elements.emplace(key, std::move(elem));
  }
  for (const json& p : j.value("pruned", json::array()))
    set.pruned.push_back(u64_from_json(p));
  for (const json& p : j.value("skipped", json::array()))
    set.skipped.push_back(u64_from_json(p));
  return set;
}

std::string sample_to_json(const RandomSample& sample) {
  ordered_json j;
  j["delta"] = sample.delta;
  j["n_max"] = sample.n_max;
  j["seed"] = sample.seed;
  j["members"] = sample.members;
  return j.dump(2) + "\n";
}

RandomSample sample_from_json(const std::string& text) {
  const json j = json::parse(text);
  RandomSample sample;
  sample.delta = j.at("delta").get<double>();
  sample.n_max = j.at("n_max").get<std::uint64_t>();
  sample.seed = j.at("seed").get<std::uint64_t>();
  sample.members = j.at("members").get<std::vector<std::uint64_t>>();
  return sample;
}

std::string violations_to_jsonl(
    const std::vector<ViolationReport>& reports) {
  std::ostringstream out;
  for (const auto& report : reports) {
    ordered_json j;
    j["t"] = report.t;
    j["gap"] = big_to_json(report.gap);
    j["threshold"] = report.threshold;
    ordered_json left = ordered_json::array();
    for (const BigInt& v : report.left) left.push_back(big_to_json(v));
    j["left"] = std::move(left);
    ordered_json right = ordered_json::array();
    for (const BigInt& v : report.right) right.push_back(big_to_json(v));
    j["right"] = std::move(right);
    if (report.ell) j["ell"] = *report.ell;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string counting_to_csv(const CountingProfile& profile) {
  std::ostringstream out;
  out << "n,count\n";
  for (std::size_t j = 0; j < profile.checkpoints.size(); ++j)
    out << to_dec(profile.checkpoints[j]) << "," << profile.counts[j]
        << "\n";
  return out.str();
}

std::string partition_to_csv(const PrimePartition& partition) {
  std::ostringstream out;
  out << "k,lower,upper,count\n";
  for (const auto& [k, part] : partition.parts)
    out << k << "," << fmt_double(part.lower_exponent) << ","
        << fmt_double(part.upper_exponent) << "," << part.primes.size()
        << "\n";
  return out.str();
}

std::string pruning_to_csv(const PrimePartition& partition,
                           const std::vector<std::uint64_t>& bad) {
  std::ostringstream out;
  out << "k,part_size,bad_count,fraction\n";
  for (const auto& [k, part] : partition.parts) {
    std::size_t bad_count = 0;
    for (std::uint64_t p : bad)
      if (partition.part_of(p) == k) ++bad_count;
    const double fraction =
        part.primes.empty()
            ? 0.0
            : static_cast<double>(bad_count) / part.primes.size();
    out << k << "," << part.primes.size() << "," << bad_count << ","
        << fmt_double(fraction) << "\n";
  }
  return out.str();
}

std::string replications_to_csv(const std::vector<ReplicationRow>& rows) {
  std::ostringstream out;
  out << "i,exact_p,empirical_p,n_trials\n";
  for (const auto& row : rows)
    out << row.i << "," << fmt_double(row.exact_p) << ","
        << fmt_double(row.empirical_p) << "," << row.n_trials << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace strongsidon
