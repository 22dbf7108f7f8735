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


#include "pdc/pdc.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/structures.hpp"
#include "verify/benchmark.hpp"
#include "verify/counting.hpp"
#include "verify/report.hpp"

struct pdc_rng {
  explicit pdc_rng(std::uint64_t seed) : rng(seed) {}
  pdc::CountingRng rng;
};

struct pdc_family {
  explicit pdc_family(pdc::StructureProblem p) : problem(std::move(p)) {}
  pdc::StructureProblem problem;
};

namespace {

thread_local std::string last_error;

pdc_status FromCode(pdc::ErrorCode code) {
  switch (code) {
    case pdc::ErrorCode::kInvalidArgument: return PDC_ERR_INVALID_ARGUMENT;
    case pdc::ErrorCode::kInvalidFamily: return PDC_ERR_INVALID_FAMILY;
    case pdc::ErrorCode::kInvalidProfile: return PDC_ERR_INVALID_PROFILE;
    case pdc::ErrorCode::kNonTerminating: return PDC_ERR_NON_TERMINATING;
    case pdc::ErrorCode::kSupportTooLarge: return PDC_ERR_SUPPORT_TOO_LARGE;
    case pdc::ErrorCode::kUnboundedDensity: return PDC_ERR_UNBOUNDED_DENSITY;
    case pdc::ErrorCode::kInvalidRejection: return PDC_ERR_INVALID_REJECTION;
    case pdc::ErrorCode::kSingularSystem: return PDC_ERR_SINGULAR_SYSTEM;
    case pdc::ErrorCode::kDimensionMismatch: return PDC_ERR_DIMENSION_MISMATCH;
  }
  return PDC_ERR_INTERNAL;
}

pdc_status Fail(pdc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
pdc_status Guard(F&& body) {
  try {
    return body();
  } catch (const pdc::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PDC_ERR_INTERNAL, e.what());
  }
}

pdc_status NullArgument(const char* name) {
  return Fail(PDC_ERR_INVALID_ARGUMENT, std::string(name) + " must not be null");
}

pdc::SamplerOptions Options(std::uint64_t max_attempts) {
  pdc::SamplerOptions o;
  if (max_attempts > 0) o.max_attempts = max_attempts;
  return o;
}

void WriteInfo(const pdc::SampleRecord& r, pdc_sample_info* info) {
  if (info) *info = {r.attempts, r.rng_calls};
}

void CopyOut(const std::vector<double>& values, double* out) {
  std::memcpy(out, values.data(), values.size() * sizeof(double));
}

std::optional<pdc::Method> ToMethod(pdc_method m) {
  switch (m) {
    case PDC_METHOD_HARD: return pdc::Method::kHard;
    case PDC_METHOD_DSH: return pdc::Method::kDsh;
    case PDC_METHOD_SOFT: return pdc::Method::kSoft;
  }
  return std::nullopt;
}

std::optional<pdc::BorelVariant> ToVariant(int v) {
  if (v < 1 || v > 3) return std::nullopt;
  return static_cast<pdc::BorelVariant>(v);
}

void WriteReport(const pdc::GofReport& r, pdc_gof_report* out) {
  out->statistic = r.result.statistic;
  out->p_value = r.result.p_value;
  out->cells = r.result.cells;
  out->trials = r.trials;
  out->passed = r.passed ? 1 : 0;
  out->is_ks = r.test == "ks" ? 1 : 0;
}

}  // namespace

extern "C" {

const char* pdc_status_string(pdc_status status) {
  switch (status) {
    case PDC_OK: return "ok";
    case PDC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PDC_ERR_INVALID_FAMILY: return "invalid family";
    case PDC_ERR_INVALID_PROFILE: return "invalid profile";
    case PDC_ERR_NON_TERMINATING: return "non-terminating";
    case PDC_ERR_SUPPORT_TOO_LARGE: return "support too large";
    case PDC_ERR_UNBOUNDED_DENSITY: return "unbounded density";
    case PDC_ERR_INVALID_REJECTION: return "invalid rejection";
    case PDC_ERR_SINGULAR_SYSTEM: return "singular system";
    case PDC_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case PDC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PDC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pdc_last_error_message(void) { return last_error.c_str(); }

pdc_status pdc_rng_create(uint64_t seed, pdc_rng** out) {
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = new pdc_rng(seed);
    return PDC_OK;
  });
}

void pdc_rng_destroy(pdc_rng* rng) { delete rng; }

uint64_t pdc_rng_calls(const pdc_rng* rng) { return rng ? rng->rng.calls() : 0; }

uint64_t pdc_derive_seed(uint64_t seed, uint64_t index) { return pdc::DeriveSeed(seed, index); }

pdc_status pdc_family_kind_parse(const char* name, pdc_family_kind* out) {
  if (!name) return NullArgument("name");
  if (!out) return NullArgument("out");
  const auto kind = pdc::ParseFamilyKind(name);
  if (!kind) return Fail(PDC_ERR_INVALID_FAMILY, std::string("unknown family: ") + name);
  *out = static_cast<pdc_family_kind>(*kind);
  return PDC_OK;
}

const char* pdc_family_kind_name(pdc_family_kind kind) {
  return pdc::ToString(static_cast<pdc::FamilyKind>(kind));
}

void pdc_family_spec_init(pdc_family_spec* spec) {
  if (!spec) return;
  *spec = pdc_family_spec{PDC_FAMILY_PARTITION, 0, 0, 1.0, 0.0, nullptr, 0,
                          PDC_PLANE_AGGREGATED};
}

pdc_status pdc_family_create(const pdc_family_spec* spec, pdc_family** out) {
  if (!spec) return NullArgument("spec");
  if (!out) return NullArgument("out");
  if (spec->kind < PDC_FAMILY_PARTITION || spec->kind > PDC_FAMILY_EWENS) {
    return Fail(PDC_ERR_INVALID_FAMILY, "unknown family kind");
  }
  if (spec->plane_mode < PDC_PLANE_AGGREGATED || spec->plane_mode > PDC_PLANE_FULL_GRID) {
    return Fail(PDC_ERR_INVALID_ARGUMENT, "unknown plane mode");
  }
  return Guard([&] {
    pdc::StructureFamily f;
    f.kind = static_cast<pdc::FamilyKind>(spec->kind);
    f.n = spec->n;
    if (spec->tilt > 0.0) f.tilt = spec->tilt;
    if (spec->colors) {
      f.colors = std::vector<std::int64_t>(spec->colors, spec->colors + spec->colors_len);
    } else if (spec->colors_len > 0) {
      return NullArgument("colors");
    }
    f.theta = spec->theta;
    f.parts = spec->k;
    f.plane_mode = static_cast<pdc::PlaneGridMode>(spec->plane_mode);
    *out = new pdc_family(pdc::BuildProblem(f));
    return PDC_OK;
  });
}

void pdc_family_destroy(pdc_family* family) { delete family; }

double pdc_family_tilt(const pdc_family* family) {
  return family ? family->problem.tilt() : 0.0;
}

size_t pdc_family_dimension(const pdc_family* family) {
  return family ? family->problem.problem().size() : 0;
}

size_t pdc_family_index_set(const pdc_family* family, size_t out[2]) {
  if (!family) return 0;
  const auto& index = family->problem.problem().index_set();
  for (std::size_t r = 0; r < index.size() && out; ++r) out[r] = index[r];
  return index.size();
}

pdc_status pdc_family_sample(const pdc_family* family, pdc_method method,
                             uint64_t max_attempts, pdc_rng* rng, int64_t* out, size_t cap,
                             size_t* len, pdc_sample_info* info) {
  if (!family) return NullArgument("family");
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  const auto m = ToMethod(method);
  if (!m) return Fail(PDC_ERR_INVALID_ARGUMENT, "unknown method");
  const auto n = static_cast<std::size_t>(family->problem.family().n);
  if (cap < n) return Fail(PDC_ERR_BUFFER_TOO_SMALL, "output buffer needs n entries");
  return Guard([&] {
    const pdc::StructureRecord r =
        pdc::SampleStructure(family->problem, *m, rng->rng, Options(max_attempts));
    std::size_t written = 0;
    if (const auto* c = std::get_if<pdc::MultiplicityVector>(&r.sample)) {
      for (std::int64_t v : *c) out[written++] = v;
    } else {
      for (const pdc::GridCell& cell : std::get<pdc::PlaneGrid>(r.sample).cells) {
        out[written++] = cell.row;
        out[written++] = cell.col;
        out[written++] = cell.count;
      }
    }
    if (len) *len = written;
    if (info) *info = {r.attempts, r.rng_calls};
    return PDC_OK;
  });
}

pdc_status pdc_set_partition_materialize(const int64_t* profile, int64_t n, pdc_rng* rng,
                                         int64_t* elements, int64_t* block_sizes,
                                         size_t* num_blocks) {
  if (!profile) return NullArgument("profile");
  if (!rng) return NullArgument("rng");
  if (!elements || !block_sizes || !num_blocks) return NullArgument("output");
  if (n < 1) return Fail(PDC_ERR_INVALID_PROFILE, "n must be at least 1");
  return Guard([&] {
    const pdc::MultiplicityVector c(profile, profile + n);
    const auto blocks = pdc::MaterializeSetPartition(c, n, rng->rng);
    std::size_t e = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      block_sizes[b] = static_cast<int64_t>(blocks[b].size());
      for (std::int64_t v : blocks[b]) elements[e++] = v;
    }
    *num_blocks = blocks.size();
    return PDC_OK;
  });
}

pdc_status pdc_feller_cycles(int64_t n, pdc_rng* rng, int64_t* out) {
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const auto c = pdc::FellerPermutationCycles(n, rng->rng);
    std::memcpy(out, c.data(), c.size() * sizeof(int64_t));
    return PDC_OK;
  });
}

pdc_status pdc_exponential_sum(const double* rates, size_t n, double k, size_t index,
                               uint64_t max_attempts, pdc_rng* rng, double* out,
                               pdc_sample_info* info) {
  if (!rates) return NullArgument("rates");
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const auto r = pdc::SampleExponentialSum({rates, n}, k, index, rng->rng,
                                             Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_beta_sum(const double* alphas, const double* betas, size_t n, double k,
                        int64_t index, uint64_t max_attempts, pdc_rng* rng, double* out,
                        pdc_sample_info* info) {
  if (!alphas || !betas) return NullArgument("alphas/betas");
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    std::optional<std::size_t> i;
    if (index >= 0) i = static_cast<std::size_t>(index);
    const auto r = pdc::SampleBetaSum({alphas, n}, {betas, n}, k, i, rng->rng,
                                      Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_hypersimplex(int64_t n, double k, uint64_t max_attempts, pdc_rng* rng,
                            double* out, pdc_sample_info* info) {
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const auto r = pdc::SampleHypersimplex(n, k, rng->rng, Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_permutahedron(int64_t n, uint64_t max_attempts, pdc_rng* rng, double* out,
                             pdc_sample_info* info) {
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const auto r = pdc::SamplePermutahedron(n, rng->rng, Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_rado_check(const double* point, size_t n, int* out) {
  if (!point && n > 0) return NullArgument("point");
  if (!out) return NullArgument("out");
  return Guard([&] {
    *out = pdc::RadoCheck({point, n}) ? 1 : 0;
    return PDC_OK;
  });
}

pdc_status pdc_uniform_spacings(int64_t m, pdc_rng* rng, double* out) {
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    CopyOut(pdc::UniformSpacings(m, rng->rng), out);
    return PDC_OK;
  });
}

pdc_status pdc_polytope_sample(const double* vertices, size_t num_vertices, size_t dim,
                               pdc_rng* rng, double* out) {
  if (!vertices) return NullArgument("vertices");
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    std::vector<std::vector<double>> v(num_vertices);
    for (std::size_t i = 0; i < num_vertices; ++i) {
      v[i].assign(vertices + i * dim, vertices + (i + 1) * dim);
    }
    CopyOut(pdc::FellerPolytopeSample(pdc::Polytope(std::move(v)), rng->rng), out);
    return PDC_OK;
  });
}

pdc_status pdc_sphere_surface(int64_t n, double k, size_t index, double sup_bound,
                              uint64_t max_attempts, pdc_rng* rng, double* out,
                              pdc_sample_info* info) {
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    const auto r =
        pdc::SampleSphereSurface(pdc::ContinuousMarginal::AbsWeightedGaussian(), n, k, index,
                                 sup_bound, rng->rng, Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_small_ball(const double* weights, size_t n, const double* lo, const double* hi,
                          size_t num_intervals, size_t index, uint64_t max_attempts,
                          pdc_rng* rng, double* out, pdc_sample_info* info) {
  if (!weights) return NullArgument("weights");
  if (!lo || !hi) return NullArgument("interval bounds");
  if (!rng) return NullArgument("rng");
  if (!out) return NullArgument("out");
  return Guard([&] {
    std::vector<pdc::OpenInterval> intervals;
    for (std::size_t j = 0; j < num_intervals; ++j) intervals.push_back({lo[j], hi[j]});
    const auto r = pdc::SmallBallSample({weights, n}, pdc::IntervalUnion(std::move(intervals)),
                                        index, rng->rng, Options(max_attempts));
    CopyOut(r.outcome, out);
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_borel(int variant, pdc_rng* rng, double* value, pdc_sample_info* info) {
  if (!rng) return NullArgument("rng");
  if (!value) return NullArgument("value");
  const auto v = ToVariant(variant);
  if (!v) return Fail(PDC_ERR_INVALID_ARGUMENT, "Borel variant must be 1, 2 or 3");
  return Guard([&] {
    const auto r = pdc::BorelConditionalSample(*v, rng->rng);
    *value = r.outcome[1];
    WriteInfo(r, info);
    return PDC_OK;
  });
}

pdc_status pdc_family_benchmark(const pdc_family* family, pdc_method method, uint64_t trials,
                                uint64_t seed, unsigned jobs, uint64_t max_attempts,
                                pdc_cost_stats* out) {
  if (!family) return NullArgument("family");
  if (!out) return NullArgument("out");
  const auto m = ToMethod(method);
  if (!m) return Fail(PDC_ERR_INVALID_ARGUMENT, "unknown method");
  return Guard([&] {
    const auto options = Options(max_attempts);
    const pdc::StructureProblem& sp = family->problem;
    const auto s = pdc::Benchmark(
        [&](pdc::CountingRng& rng) {
          const auto r = pdc::SampleStructure(sp, *m, rng, options);
          return pdc::TrialCost{r.attempts, r.rng_calls};
        },
        trials, seed, jobs);
    *out = {s.trials,      s.acceptances,          s.attempts_total, s.rng_calls_total,
            s.accept_rate, s.rng_calls_per_sample, s.wall_seconds};
    return PDC_OK;
  });
}

pdc_status pdc_speedup_ratio(const pdc_cost_stats* a, const pdc_cost_stats* b, double* out) {
  if (!a || !b) return NullArgument("stats");
  if (!out) return NullArgument("out");
  return Guard([&] {
    pdc::CostStats x;
    pdc::CostStats y;
    x.rng_calls_per_sample = a->rng_calls_per_sample;
    y.rng_calls_per_sample = b->rng_calls_per_sample;
    *out = pdc::SpeedupRatio(x, y);
    return PDC_OK;
  });
}

pdc_status pdc_family_verify(const pdc_family* family, pdc_method method, uint64_t trials,
                             uint64_t seed, size_t support_cap, pdc_gof_report* out) {
  if (!family) return NullArgument("family");
  if (!out) return NullArgument("out");
  const auto m = ToMethod(method);
  if (!m) return Fail(PDC_ERR_INVALID_ARGUMENT, "unknown method");
  return Guard([&] {
    WriteReport(pdc::VerifyFamily(family->problem.family(), *m, trials, seed,
                                  support_cap ? support_cap : pdc::kDefaultSupportCap),
                out);
    return PDC_OK;
  });
}

pdc_status pdc_borel_verify(int variant, uint64_t trials, uint64_t seed, pdc_gof_report* out) {
  if (!out) return NullArgument("out");
  const auto v = ToVariant(variant);
  if (!v) return Fail(PDC_ERR_INVALID_ARGUMENT, "Borel variant must be 1, 2 or 3");
  return Guard([&] {
    WriteReport(pdc::VerifyBorel(*v, trials, seed), out);
    return PDC_OK;
  });
}

pdc_status pdc_feller_verify(int64_t n, uint64_t trials, uint64_t seed, pdc_gof_report* out) {
  if (!out) return NullArgument("out");
  return Guard([&] {
    WriteReport(pdc::VerifyFeller(n, trials, seed), out);
    return PDC_OK;
  });
}

pdc_status pdc_counting_oracle(const char* kind, int64_t n, char* buf, size_t cap,
                               size_t* len) {
  if (!kind) return NullArgument("kind");
  if (!buf) return NullArgument("buf");
  const auto k = pdc::ParseCountKind(kind);
  if (!k) return Fail(PDC_ERR_INVALID_ARGUMENT, std::string("unknown count kind: ") + kind);
  return Guard([&] {
    const std::string digits = pdc::CountingOracle(*k, n).str();
    if (len) *len = digits.size();
    if (cap < digits.size() + 1) {
      return Fail(PDC_ERR_BUFFER_TOO_SMALL, "count needs " + std::to_string(digits.size() + 1) +
                                                " bytes");
    }
    std::memcpy(buf, digits.c_str(), digits.size() + 1);
    return PDC_OK;
  });
}

}  // extern "C"
