// Copyright 2026 The PDC Sampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Samples are written as JSON lines, benchmarks as
// CSV; every number is printed with 12 significant digits.
//
// Exit codes: 0 success, 1 verification failed, 2 configuration error,
// 3 attempt guard exceeded, 4 oracle capacity exceeded.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdc/pdc.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;
constexpr const char* kSeedVariable = "PDC_SEED";

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNonTerminating = 3;
constexpr int kExitCapacity = 4;

struct CliError {
  int exit_code;
  std::string message;
};

void Check(pdc_status s) {
  if (s == PDC_OK) return;
  int code = kExitConfig;
  if (s == PDC_ERR_NON_TERMINATING) code = kExitNonTerminating;
  if (s == PDC_ERR_SUPPORT_TOO_LARGE) code = kExitCapacity;
  if (s == PDC_ERR_INTERNAL) code = kExitVerifyFailed;
  throw CliError{code, std::string(pdc_status_string(s)) + ": " + pdc_last_error_message()};
}

[[noreturn]] void ConfigError(const std::string& message) {
  throw CliError{kExitConfig, message};
}

std::string Num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string Int(std::int64_t v) { return std::to_string(v); }

template <typename T, typename F>
std::string Array(const std::vector<T>& values, F format) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format(values[i]);
  }
  return s + "]";
}

class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed) { Check(pdc_rng_create(seed, &rng_)); }
  ~RngHandle() { pdc_rng_destroy(rng_); }
  RngHandle(const RngHandle&) = delete;
  RngHandle& operator=(const RngHandle&) = delete;
  pdc_rng* get() { return rng_; }

 private:
  pdc_rng* rng_ = nullptr;
};

class FamilyHandle {
 public:
  explicit FamilyHandle(const pdc_family_spec& spec) { Check(pdc_family_create(&spec, &f_)); }
  ~FamilyHandle() { pdc_family_destroy(f_); }
  FamilyHandle(const FamilyHandle&) = delete;
  FamilyHandle& operator=(const FamilyHandle&) = delete;
  const pdc_family* get() const { return f_; }

 private:
  pdc_family* f_ = nullptr;
};

// Options shared by every subcommand; unused ones are ignored.
struct Config {
  std::string selector;
  std::vector<std::int64_t> n;
  std::optional<double> k;
  double theta = 1.0;
  double tilt = 0.0;
  std::vector<std::int64_t> colors;
  std::string plane_mode = "aggregated";
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string method;
  std::vector<std::string> methods;
  std::string format;
  std::uint64_t max_attempts = 0;
  std::uint64_t trials = 1000;
  unsigned jobs = 1;
  std::uint64_t support_cap = 0;
  std::optional<std::int64_t> m;
  std::vector<double> rates;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::optional<std::int64_t> index;
  std::vector<double> weights;
  std::string region;
  std::string vertices;
  double sup_bound = 1.0;
  int variant = 1;
  bool blocks = false;
};

std::uint64_t ResolveSeed(const Config& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv(kSeedVariable); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0') ConfigError(std::string(kSeedVariable) + " is not an integer");
    return v;
  }
  return kDefaultSeed;
}

std::int64_t SingleN(const Config& c) {
  if (c.n.size() != 1) ConfigError("--n takes exactly one value here");
  return c.n.front();
}

double RequireK(const Config& c) {
  if (!c.k) ConfigError("--k is required for " + c.selector);
  return *c.k;
}

std::optional<pdc_family_kind> FamilyKind(const std::string& name) {
  pdc_family_kind kind;
  if (pdc_family_kind_parse(name.c_str(), &kind) != PDC_OK) return std::nullopt;
  return kind;
}

pdc_method ParseMethod(const std::string& name) {
  if (name == "hard") return PDC_METHOD_HARD;
  if (name == "dsh") return PDC_METHOD_DSH;
  if (name == "soft") return PDC_METHOD_SOFT;
  ConfigError("method '" + name + "' does not apply to combinatorial families");
}

pdc_family_spec FamilySpec(const Config& c, pdc_family_kind kind, std::int64_t n) {
  pdc_family_spec spec;
  pdc_family_spec_init(&spec);
  spec.kind = kind;
  spec.n = n;
  spec.theta = c.theta;
  spec.tilt = c.tilt;
  if (!c.colors.empty()) {
    spec.colors = c.colors.data();
    spec.colors_len = c.colors.size();
  }
  if (kind == PDC_FAMILY_EWENS) {
    const double k = RequireK(c);
    if (k != std::floor(k)) ConfigError("--k must be an integer part count for ewens");
    spec.k = static_cast<std::int64_t>(k);
  }
  if (c.plane_mode == "aggregated") {
    spec.plane_mode = PDC_PLANE_AGGREGATED;
  } else if (c.plane_mode == "per-cell") {
    spec.plane_mode = PDC_PLANE_PER_CELL;
  } else if (c.plane_mode == "full") {
    spec.plane_mode = PDC_PLANE_FULL_GRID;
  } else {
    ConfigError("--plane-mode must be aggregated, per-cell or full");
  }
  return spec;
}

std::string RecordPrefix(const Config& c, std::int64_t n, std::uint64_t seed,
                         std::uint64_t index) {
  return "{\"schema\":1,\"family\":\"" + c.selector + "\",\"n\":" + Int(n) +
         ",\"seed\":" + std::to_string(seed) + ",\"index\":" + std::to_string(index);
}

std::string CostSuffix(const pdc_sample_info& info) {
  return ",\"attempts\":" + std::to_string(info.attempts) +
         ",\"rng_calls\":" + std::to_string(info.rng_calls) + "}";
}

// Accepts `method` when it is empty or one of `allowed`.
void RequireMethod(const Config& c, const std::set<std::string>& allowed) {
  if (c.method.empty() || allowed.count(c.method)) return;
  std::string names;
  for (const auto& a : allowed) names += (names.empty() ? "" : ", ") + a;
  ConfigError("method '" + c.method + "' does not apply to " + c.selector +
              (names.empty() ? " (no method choice)" : " (allowed: " + names + ")"));
}

std::vector<std::pair<double, double>> ParseRegion(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) ConfigError("--region entries look like lo:hi");
    char* end = nullptr;
    const double lo = std::strtod(item.substr(0, colon).c_str(), &end);
    if (*end) ConfigError("bad region bound: " + item);
    const double hi = std::strtod(item.substr(colon + 1).c_str(), &end);
    if (*end) ConfigError("bad region bound: " + item);
    out.emplace_back(lo, hi);
  }
  if (out.empty()) ConfigError("--region is required");
  return out;
}

std::vector<std::vector<double>> ParseVertices(const std::string& text) {
  std::vector<std::vector<double>> out;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<double> v;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      char* end = nullptr;
      v.push_back(std::strtod(cell.c_str(), &end));
      if (*end || cell.empty()) ConfigError("bad vertex coordinate: " + cell);
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) ConfigError("--vertices is required, e.g. \"0,0;1,0;0,1\"");
  return out;
}

void PrintCsvHeader() { std::printf("schema,family,n,seed,index,attempts,rng_calls,outcome\n"); }

// Emits one record in the configured format. `outcome_json` is a JSON array;
// CSV rows carry it quoted.
void Emit(const Config& c, std::int64_t n, std::uint64_t seed, std::uint64_t index,
          const std::string& outcome_json, const pdc_sample_info& info,
          const std::string& extra = {}) {
  if (c.format == "csv") {
    std::string quoted;
    for (char ch : outcome_json) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    std::printf("1,%s,%lld,%llu,%llu,%llu,%llu,\"%s\"\n", c.selector.c_str(),
                static_cast<long long>(n), static_cast<unsigned long long>(seed),
                static_cast<unsigned long long>(index),
                static_cast<unsigned long long>(info.attempts),
                static_cast<unsigned long long>(info.rng_calls), quoted.c_str());
    return;
  }
  std::printf("%s,\"outcome\":%s%s%s\n", RecordPrefix(c, n, seed, index).c_str(),
              outcome_json.c_str(), extra.c_str(), CostSuffix(info).c_str());
}

int RunSample(Config c) {
  if (c.format.empty()) c.format = "jsonl";
  if (c.format != "jsonl" && c.format != "csv") ConfigError("--format must be jsonl or csv");
  const std::uint64_t seed = ResolveSeed(c);
  RngHandle rng(seed);
  if (c.format == "csv") PrintCsvHeader();
  auto dbl = [](double v) { return Num(v); };

  if (const auto kind = FamilyKind(c.selector)) {
    const std::int64_t n = SingleN(c);
    const pdc_method method = ParseMethod(c.method.empty() ? "dsh" : c.method);
    FamilyHandle family(FamilySpec(c, *kind, n));
    std::vector<int64_t> buf(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)));
    for (std::uint64_t i = 0; i < c.count; ++i) {
      std::size_t len = 0;
      pdc_sample_info info{};
      Check(pdc_family_sample(family.get(), method, c.max_attempts, rng.get(), buf.data(),
                              buf.size(), &len, &info));
      std::string outcome;
      if (*kind == PDC_FAMILY_PLANE_GRID) {
        outcome = "[";
        for (std::size_t j = 0; j < len; j += 3) {
          if (j) outcome += ',';
          outcome += "[" + Int(buf[j]) + "," + Int(buf[j + 1]) + "," + Int(buf[j + 2]) + "]";
        }
        outcome += "]";
      } else {
        outcome = Array(std::vector<int64_t>(buf.begin(), buf.begin() + len), Int);
      }
      std::string extra;
      if (*kind == PDC_FAMILY_SET_PARTITION && c.blocks && c.format == "jsonl") {
        std::vector<int64_t> elements(static_cast<std::size_t>(n));
        std::vector<int64_t> sizes(static_cast<std::size_t>(n));
        std::size_t num_blocks = 0;
        Check(pdc_set_partition_materialize(buf.data(), n, rng.get(), elements.data(),
                                            sizes.data(), &num_blocks));
        extra = ",\"blocks\":[";
        std::size_t e = 0;
        for (std::size_t b = 0; b < num_blocks; ++b) {
          if (b) extra += ',';
          std::vector<int64_t> block(elements.begin() + e, elements.begin() + e + sizes[b]);
          e += static_cast<std::size_t>(sizes[b]);
          extra += Array(block, Int);
        }
        extra += "]";
      }
      Emit(c, n, seed, i, outcome, info, extra);
    }
    return 0;
  }

  const std::string& s = c.selector;
  for (std::uint64_t i = 0; i < c.count; ++i) {
    pdc_sample_info info{};
    std::vector<double> out;
    std::int64_t n = 0;
    if (s == "feller") {
      RequireMethod(c, {});
      n = SingleN(c);
      if (n < 1) ConfigError("--n must be at least 1");
      std::vector<int64_t> cycles(static_cast<std::size_t>(n));
      const std::uint64_t before = pdc_rng_calls(rng.get());
      Check(pdc_feller_cycles(n, rng.get(), cycles.data()));
      info = {1, pdc_rng_calls(rng.get()) - before};
      Emit(c, n, seed, i, Array(cycles, Int), info);
      continue;
    }
    if (s == "exponential") {
      RequireMethod(c, {"dsh"});
      std::vector<double> rates = c.rates;
      if (rates.empty()) rates.assign(static_cast<std::size_t>(std::max<int64_t>(SingleN(c), 0)), 1.0);
      n = static_cast<std::int64_t>(rates.size());
      out.resize(rates.size());
      Check(pdc_exponential_sum(rates.data(), rates.size(), RequireK(c),
                                static_cast<std::size_t>(c.index.value_or(0)), c.max_attempts,
                                rng.get(), out.data(), &info));
    } else if (s == "beta") {
      RequireMethod(c, {"dsh"});
      if (c.alphas.size() != c.betas.size()) ConfigError("--alphas and --betas differ in length");
      n = static_cast<std::int64_t>(c.alphas.size());
      out.resize(c.alphas.size());
      Check(pdc_beta_sum(c.alphas.data(), c.betas.data(), c.alphas.size(), RequireK(c),
                         c.index.value_or(-1), c.max_attempts, rng.get(), out.data(), &info));
    } else if (s == "hypersimplex") {
      RequireMethod(c, {"uniform"});
      n = SingleN(c);
      out.resize(static_cast<std::size_t>(std::max<int64_t>(n, 0)));
      Check(pdc_hypersimplex(n, RequireK(c), c.max_attempts, rng.get(), out.data(), &info));
    } else if (s == "permutahedron") {
      RequireMethod(c, {"uniform"});
      n = SingleN(c);
      out.resize(static_cast<std::size_t>(std::max<int64_t>(n, 0)));
      Check(pdc_permutahedron(n, c.max_attempts, rng.get(), out.data(), &info));
    } else if (s == "spacings") {
      RequireMethod(c, {});
      if (!c.m) ConfigError("--m is required for spacings");
      n = *c.m;
      if (n < 0) ConfigError("--m must be non-negative");
      out.resize(static_cast<std::size_t>(n + 1));
      const std::uint64_t before = pdc_rng_calls(rng.get());
      Check(pdc_uniform_spacings(n, rng.get(), out.data()));
      info = {1, pdc_rng_calls(rng.get()) - before};
    } else if (s == "polytope") {
      RequireMethod(c, {});
      const auto verts = ParseVertices(c.vertices);
      const std::size_t dim = verts.front().size();
      std::vector<double> flat;
      for (const auto& v : verts) {
        if (v.size() != dim) ConfigError("vertices differ in dimension");
        flat.insert(flat.end(), v.begin(), v.end());
      }
      n = static_cast<std::int64_t>(dim);
      out.resize(dim);
      const std::uint64_t before = pdc_rng_calls(rng.get());
      Check(pdc_polytope_sample(flat.data(), verts.size(), dim, rng.get(), out.data()));
      info = {1, pdc_rng_calls(rng.get()) - before};
    } else if (s == "sphere") {
      RequireMethod(c, {"soft"});
      n = SingleN(c);
      out.resize(static_cast<std::size_t>(std::max<int64_t>(n, 0)));
      Check(pdc_sphere_surface(n, RequireK(c), static_cast<std::size_t>(c.index.value_or(0)),
                               c.sup_bound, c.max_attempts, rng.get(), out.data(), &info));
    } else if (s == "smallball") {
      RequireMethod(c, {"soft"});
      const auto region = ParseRegion(c.region);
      std::vector<double> lo;
      std::vector<double> hi;
      for (const auto& [a, b] : region) {
        lo.push_back(a);
        hi.push_back(b);
      }
      n = static_cast<std::int64_t>(c.weights.size());
      out.resize(c.weights.size());
      Check(pdc_small_ball(c.weights.data(), c.weights.size(), lo.data(), hi.data(),
                           region.size(), static_cast<std::size_t>(c.index.value_or(0)),
                           c.max_attempts, rng.get(), out.data(), &info));
    } else if (s == "borel") {
      RequireMethod(c, {"soft"});
      n = 1;
      out.resize(1);
      Check(pdc_borel(c.variant, rng.get(), out.data(), &info));
    } else {
      ConfigError("unknown selector '" + s + "'");
    }
    Emit(c, n, seed, i, Array(out, dbl), info);
  }
  return 0;
}

int RunBenchmark(Config c) {
  if (c.format.empty()) c.format = "csv";
  if (c.format != "csv" && c.format != "jsonl") ConfigError("--format must be csv or jsonl");
  const auto kind = FamilyKind(c.selector);
  if (!kind) ConfigError("benchmark takes a combinatorial family, got '" + c.selector + "'");
  if (c.n.empty()) ConfigError("--n is required");
  if (c.methods.empty()) c.methods = {"hard", "dsh"};
  std::vector<pdc_method> methods;
  for (const auto& m : c.methods) methods.push_back(ParseMethod(m));
  if (c.trials < 1) ConfigError("--trials must be at least 1");
  if (c.jobs < 1) ConfigError("--jobs must be at least 1");
  const std::uint64_t seed = ResolveSeed(c);

  if (c.format == "csv") {
    std::printf("schema,family,n,method,trials,accept_rate,rng_calls_per_sample,speedup_vs_hard\n");
  }
  for (std::int64_t n : c.n) {
    FamilyHandle family(FamilySpec(c, *kind, n));
    std::map<pdc_method, pdc_cost_stats> stats;
    auto measure = [&](pdc_method m) -> const pdc_cost_stats& {
      auto it = stats.find(m);
      if (it == stats.end()) {
        pdc_cost_stats s{};
        Check(pdc_family_benchmark(family.get(), m, c.trials, seed, c.jobs, c.max_attempts, &s));
        it = stats.emplace(m, s).first;
      }
      return it->second;
    };
    for (std::size_t j = 0; j < methods.size(); ++j) {
      const pdc_cost_stats s = measure(methods[j]);
      const pdc_cost_stats& hard = measure(PDC_METHOD_HARD);
      double speedup = 0.0;
      Check(pdc_speedup_ratio(&hard, &s, &speedup));
      if (c.format == "csv") {
        std::printf("1,%s,%lld,%s,%llu,%s,%s,%s\n", c.selector.c_str(), static_cast<long long>(n),
                    c.methods[j].c_str(), static_cast<unsigned long long>(s.trials),
                    Num(s.accept_rate).c_str(), Num(s.rng_calls_per_sample).c_str(),
                    Num(speedup).c_str());
      } else {
        std::printf(
            "{\"schema\":1,\"family\":\"%s\",\"n\":%lld,\"method\":\"%s\",\"trials\":%llu,"
            "\"accept_rate\":%s,\"rng_calls_per_sample\":%s,\"speedup_vs_hard\":%s}\n",
            c.selector.c_str(), static_cast<long long>(n), c.methods[j].c_str(),
            static_cast<unsigned long long>(s.trials), Num(s.accept_rate).c_str(),
            Num(s.rng_calls_per_sample).c_str(), Num(speedup).c_str());
      }
    }
  }
  return 0;
}

int RunVerify(Config c) {
  const std::uint64_t seed = ResolveSeed(c);
  bool all_passed = true;
  auto report = [&](const std::string& method, std::int64_t n, const pdc_gof_report& r) {
    std::printf(
        "{\"schema\":1,\"family\":\"%s\",\"n\":%lld,\"method\":\"%s\",\"test\":\"%s\","
        "\"statistic\":%s,\"p_value\":%s,\"cells\":%llu,\"trials\":%llu,\"passed\":%s}\n",
        c.selector.c_str(), static_cast<long long>(n), method.c_str(), r.is_ks ? "ks" : "chi2",
        Num(r.statistic).c_str(), Num(r.p_value).c_str(),
        static_cast<unsigned long long>(r.cells), static_cast<unsigned long long>(r.trials),
        r.passed ? "true" : "false");
    all_passed = all_passed && r.passed;
  };
  if (c.trials < 1) ConfigError("--trials must be at least 1");

  if (const auto kind = FamilyKind(c.selector)) {
    const std::int64_t n = SingleN(c);
    if (c.methods.empty()) c.methods = {c.method.empty() ? "dsh" : c.method};
    FamilyHandle family(FamilySpec(c, *kind, n));
    for (const auto& name : c.methods) {
      pdc_gof_report r{};
      Check(pdc_family_verify(family.get(), ParseMethod(name), c.trials, seed, c.support_cap,
                              &r));
      report(name, n, r);
    }
  } else if (c.selector == "borel") {
    pdc_gof_report r{};
    Check(pdc_borel_verify(c.variant, c.trials, seed, &r));
    report("soft", c.variant, r);
  } else if (c.selector == "feller") {
    const std::int64_t n = SingleN(c);
    pdc_gof_report r{};
    Check(pdc_feller_verify(n, c.trials, seed, &r));
    report("feller", n, r);
  } else {
    ConfigError("verify takes a family, borel or feller; got '" + c.selector + "'");
  }
  return all_passed ? 0 : kExitVerifyFailed;
}

void AddCommon(CLI::App* app, Config& c) {
  app->add_option("selector", c.selector, "Family or sampler name")->required();
  app->add_option("--seed", c.seed, "Seed (default $PDC_SEED, else 20260101)");
  app->add_option("--max-attempts", c.max_attempts, "Attempt guard (0 = library default)");
  app->add_option("--theta", c.theta, "Ewens theta");
  app->add_option("--tilt", c.tilt, "Tilt override (family default when absent)");
  app->add_option("--colors", c.colors, "Color counts m_1..m_n")->delimiter(',');
  app->add_option("--plane-mode", c.plane_mode, "aggregated, per-cell or full");
  app->add_option("--k", c.k, "Part count (ewens) or target sum");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conditional sampling by probabilistic divide-and-conquer"};
  app.require_subcommand(1);
  Config c;

  auto* sample = app.add_subcommand("sample", "Draw samples as JSON lines");
  AddCommon(sample, c);
  sample->add_option("--n", c.n, "Size or dimension");
  sample->add_option("--count", c.count, "Number of samples");
  sample->add_option("--method", c.method, "hard, dsh, soft or uniform");
  sample->add_option("--format", c.format, "jsonl or csv");
  sample->add_option("--m", c.m, "Number of uniforms (spacings)");
  sample->add_option("--rates", c.rates, "Exponential rates")->delimiter(',');
  sample->add_option("--alphas", c.alphas, "Beta alphas")->delimiter(',');
  sample->add_option("--betas", c.betas, "Beta betas")->delimiter(',');
  sample->add_option("--index", c.index, "Completed coordinate (0-based)");
  sample->add_option("--weights", c.weights, "Small-ball weights")->delimiter(',');
  sample->add_option("--region", c.region, "Small-ball region lo:hi[,lo:hi...]");
  sample->add_option("--vertices", c.vertices, "Polytope vertices \"x,y;x,y;...\"");
  sample->add_option("--sup-bound", c.sup_bound, "Density bound for X^2 (sphere)");
  sample->add_option("--variant", c.variant, "Borel variant 1, 2 or 3");
  sample->add_flag("--blocks", c.blocks, "Also materialize set-partition blocks");

  auto* bench = app.add_subcommand("benchmark", "Measure cost per sample as CSV");
  AddCommon(bench, c);
  bench->add_option("--n", c.n, "Sizes, comma separated")->delimiter(',')->required();
  bench->add_option("--methods", c.methods, "Methods, comma separated")->delimiter(',');
  bench->add_option("--trials", c.trials, "Accepted samples per method");
  bench->add_option("--jobs", c.jobs, "Worker threads");
  bench->add_option("--format", c.format, "csv or jsonl");

  auto* verify = app.add_subcommand("verify", "Goodness-of-fit against exact laws");
  AddCommon(verify, c);
  verify->add_option("--n", c.n, "Size");
  verify->add_option("--method", c.method, "Method for families");
  verify->add_option("--methods", c.methods, "Methods, comma separated")->delimiter(',');
  verify->add_option("--trials", c.trials, "Samples");
  verify->add_option("--support-cap", c.support_cap, "Oracle support cap (0 = default)");
  verify->add_option("--variant", c.variant, "Borel variant 1, 2 or 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (sample->parsed()) return RunSample(c);
    if (bench->parsed()) return RunBenchmark(c);
    return RunVerify(c);
  } catch (const CliError& e) {
    std::fflush(stdout);
    std::fprintf(stderr, "pdc: %s\n", e.message.c_str());
    return e.exit_code;
  }
}
