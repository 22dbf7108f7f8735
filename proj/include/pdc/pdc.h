/*
 * Copyright 2026 The PDC Sampler Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the exact conditional samplers.
 *
 * Every function returns a pdc_status. On failure a description is
 * available from pdc_last_error_message() on the calling thread until the
 * next failing call. Handles are opaque; a pdc_rng must not be used from two
 * threads at once, a pdc_family may be shared freely.
 *
 * Index arguments are 0-based. Output buffers are caller-owned; the required
 * length of each is stated next to the function.
 */

#ifndef PDC_PDC_H_
#define PDC_PDC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(PDC_BUILDING_LIBRARY)
#define PDC_API __attribute__((visibility("default")))
#else
#define PDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdc_status {
  PDC_OK = 0,
  PDC_ERR_INVALID_ARGUMENT = 1,
  PDC_ERR_INVALID_FAMILY = 2,
  PDC_ERR_INVALID_PROFILE = 3,
  PDC_ERR_NON_TERMINATING = 4,
  PDC_ERR_SUPPORT_TOO_LARGE = 5,
  PDC_ERR_UNBOUNDED_DENSITY = 6,
  PDC_ERR_INVALID_REJECTION = 7,
  PDC_ERR_SINGULAR_SYSTEM = 8,
  PDC_ERR_DIMENSION_MISMATCH = 9,
  PDC_ERR_BUFFER_TOO_SMALL = 10,
  PDC_ERR_INTERNAL = 11
} pdc_status;

PDC_API const char* pdc_status_string(pdc_status status);
PDC_API const char* pdc_last_error_message(void);

/* ---- random source ---------------------------------------------------- */

typedef struct pdc_rng pdc_rng;

PDC_API pdc_status pdc_rng_create(uint64_t seed, pdc_rng** out);
PDC_API void pdc_rng_destroy(pdc_rng* rng);
/* Number of uniforms drawn so far. */
PDC_API uint64_t pdc_rng_calls(const pdc_rng* rng);
/* Seed of worker `index` derived from `seed` (splitmix64 mixing). */
PDC_API uint64_t pdc_derive_seed(uint64_t seed, uint64_t index);

/* ---- combinatorial families -------------------------------------------- */

typedef enum pdc_family_kind {
  PDC_FAMILY_PARTITION = 0,
  PDC_FAMILY_DISTINCT_PARTITION = 1,
  PDC_FAMILY_SELECTION = 2,
  PDC_FAMILY_MULTISET = 3,
  PDC_FAMILY_ASSEMBLY = 4,
  PDC_FAMILY_SET_PARTITION = 5,
  PDC_FAMILY_PLANE_GRID = 6,
  PDC_FAMILY_EWENS = 7
} pdc_family_kind;

typedef enum pdc_plane_mode {
  PDC_PLANE_AGGREGATED = 0,
  PDC_PLANE_PER_CELL = 1,
  PDC_PLANE_FULL_GRID = 2
} pdc_plane_mode;

typedef enum pdc_method {
  PDC_METHOD_HARD = 0,
  PDC_METHOD_DSH = 1,
  PDC_METHOD_SOFT = 2
} pdc_method;

/* Names: partition, distinct, selection, multiset, assembly, setpartition,
 * plane, ewens. */
PDC_API pdc_status pdc_family_kind_parse(const char* name, pdc_family_kind* out);
PDC_API const char* pdc_family_kind_name(pdc_family_kind kind);

typedef struct pdc_family_spec {
  pdc_family_kind kind;
  int64_t n;
  int64_t k;              /* part count, Ewens only */
  double theta;           /* Ewens only */
  double tilt;            /* <= 0 selects the family default */
  const int64_t* colors;  /* m_1..m_n, or NULL for all ones */
  size_t colors_len;
  pdc_plane_mode plane_mode;
} pdc_family_spec;

/* Fills defaults: partition, n = 0, k = 0, theta = 1, default tilt, no
 * colors, aggregated plane grids. */
PDC_API void pdc_family_spec_init(pdc_family_spec* spec);

typedef struct pdc_family pdc_family;

PDC_API pdc_status pdc_family_create(const pdc_family_spec* spec, pdc_family** out);
PDC_API void pdc_family_destroy(pdc_family* family);
PDC_API double pdc_family_tilt(const pdc_family* family);
/* Number of engine coordinates. */
PDC_API size_t pdc_family_dimension(const pdc_family* family);
/* Writes the index set (1 or 2 entries) to out[0..1]; returns its size. */
PDC_API size_t pdc_family_index_set(const pdc_family* family, size_t out[2]);

typedef struct pdc_sample_info {
  uint64_t attempts;
  uint64_t rng_calls;
} pdc_sample_info;

/* One exact sample. For all families except plane grids `out` receives the
 * multiplicity vector c_1..c_n. Plane grids are written as flattened
 * (row, col, count) triples of the nonzero cells, sorted by (row, col).
 * Either way at most n values are written, so cap >= n always suffices.
 * max_attempts = 0 selects the default guard. */
PDC_API pdc_status pdc_family_sample(const pdc_family* family, pdc_method method,
                                     uint64_t max_attempts, pdc_rng* rng, int64_t* out,
                                     size_t cap, size_t* len, pdc_sample_info* info);

/* Uniform set partition of {1..n} with profile[i-1] blocks of size i.
 * `elements` (n entries) lists the blocks back to back, each sorted, blocks
 * ordered by size then minimum; `block_sizes` (n entries) receives the block
 * lengths and `num_blocks` their count. */
PDC_API pdc_status pdc_set_partition_materialize(const int64_t* profile, int64_t n,
                                                 pdc_rng* rng, int64_t* elements,
                                                 int64_t* block_sizes, size_t* num_blocks);

/* Cycle type of a uniform permutation of [n]; `out` has n entries. */
PDC_API pdc_status pdc_feller_cycles(int64_t n, pdc_rng* rng, int64_t* out);

/* ---- continuous samplers ----------------------------------------------- */

/* (X | sum X = k) for independent Exponential(rates); out has n entries. */
PDC_API pdc_status pdc_exponential_sum(const double* rates, size_t n, double k, size_t index,
                                       uint64_t max_attempts, pdc_rng* rng, double* out,
                                       pdc_sample_info* info);

/* (X | sum X = k) for independent Beta(alphas, betas). index < 0 picks the
 * first coordinate with alpha > 1 and beta > 1. out has n entries. */
PDC_API pdc_status pdc_beta_sum(const double* alphas, const double* betas, size_t n, double k,
                                int64_t index, uint64_t max_attempts, pdc_rng* rng,
                                double* out, pdc_sample_info* info);

/* Uniform point of the hypersimplex; out has n entries. */
PDC_API pdc_status pdc_hypersimplex(int64_t n, double k, uint64_t max_attempts, pdc_rng* rng,
                                    double* out, pdc_sample_info* info);

/* Uniform point of the permutahedron; out has n entries. */
PDC_API pdc_status pdc_permutahedron(int64_t n, uint64_t max_attempts, pdc_rng* rng,
                                     double* out, pdc_sample_info* info);

PDC_API pdc_status pdc_rado_check(const double* point, size_t n, int* out);

/* out has m + 1 entries. */
PDC_API pdc_status pdc_uniform_spacings(int64_t m, pdc_rng* rng, double* out);

/* Vertices are row-major, num_vertices x dim; out has dim entries. */
PDC_API pdc_status pdc_polytope_sample(const double* vertices, size_t num_vertices, size_t dim,
                                       pdc_rng* rng, double* out);

/* (X | sum X^2 = k) for iid X with density |x| exp(-x^2); X^2 is then
 * Exponential(1), so sup_bound = 1 is tight. out has n entries. */
PDC_API pdc_status pdc_sphere_surface(int64_t n, double k, size_t index, double sup_bound,
                                      uint64_t max_attempts, pdc_rng* rng, double* out,
                                      pdc_sample_info* info);

/* (X | sum w X in G) for X uniform on {-1,+1}^n, G the union of the open
 * intervals (lo[j], hi[j]). out has n entries. */
PDC_API pdc_status pdc_small_ball(const double* weights, size_t n, const double* lo,
                                  const double* hi, size_t num_intervals, size_t index,
                                  uint64_t max_attempts, pdc_rng* rng, double* out,
                                  pdc_sample_info* info);

/* variant 1: U - V = 0, 2: V / U = 1, 3: 1(U = V) = 1. */
PDC_API pdc_status pdc_borel(int variant, pdc_rng* rng, double* value, pdc_sample_info* info);

/* ---- cost measurement -------------------------------------------------- */

typedef struct pdc_cost_stats {
  uint64_t trials;
  uint64_t acceptances;
  uint64_t attempts_total;
  uint64_t rng_calls_total;
  double accept_rate;
  double rng_calls_per_sample;
  double wall_seconds;
} pdc_cost_stats;

/* Runs `trials` samples split over `jobs` workers seeded with
 * pdc_derive_seed(seed, worker). */
PDC_API pdc_status pdc_family_benchmark(const pdc_family* family, pdc_method method,
                                        uint64_t trials, uint64_t seed, unsigned jobs,
                                        uint64_t max_attempts, pdc_cost_stats* out);

/* a->rng_calls_per_sample / b->rng_calls_per_sample. */
PDC_API pdc_status pdc_speedup_ratio(const pdc_cost_stats* a, const pdc_cost_stats* b,
                                     double* out);

/* ---- verification ------------------------------------------------------ */

typedef struct pdc_gof_report {
  double statistic;
  double p_value;
  uint64_t cells; /* chi-squared cells after merging; 0 for KS */
  uint64_t trials;
  int passed;     /* p_value > 0.001 */
  int is_ks;
} pdc_gof_report;

/* Chi-squared against the brute-force conditional law; fails with
 * PDC_ERR_SUPPORT_TOO_LARGE when the law has more than support_cap outcomes
 * (0 selects the default cap). */
PDC_API pdc_status pdc_family_verify(const pdc_family* family, pdc_method method,
                                     uint64_t trials, uint64_t seed, size_t support_cap,
                                     pdc_gof_report* out);
PDC_API pdc_status pdc_borel_verify(int variant, uint64_t trials, uint64_t seed,
                                    pdc_gof_report* out);
PDC_API pdc_status pdc_feller_verify(int64_t n, uint64_t trials, uint64_t seed,
                                     pdc_gof_report* out);

/* Names: "p" (partitions), "q" (distinct partitions), "bell". Writes the
 * decimal count and a terminating NUL; *len receives the digit count. */
PDC_API pdc_status pdc_counting_oracle(const char* kind, int64_t n, char* buf, size_t cap,
                                       size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* PDC_PDC_H_ */
