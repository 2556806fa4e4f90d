/*
 * Copyright 2026 The coirank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * coirank C API.
 *
 * A citation-network ranking engine that separates conflict-of-interest (COI)
 * citations from ordinary ones, down-weights the negative ones, ranks papers
 * with a weighted PageRank/HITS fixed point and rolls the scores up to
 * scholars, institutions and countries.
 *
 * All objects are opaque handles. Every fallible call returns a
 * coirank_status; on failure a human-readable message is available from
 * coirank_last_error() on the same thread until the next failing call.
 * Strings returned through `const char**` out-parameters are owned by the
 * session and stay valid until the session is destroyed. Strings returned
 * through `char**` must be released with coirank_string_free().
 */

#ifndef COIRANK_COIRANK_H_
#define COIRANK_COIRANK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COIRANK_BUILDING_LIBRARY)
#    define COIRANK_API __declspec(dllexport)
#  else
#    define COIRANK_API __declspec(dllimport)
#  endif
#else
#  define COIRANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coirank_status {
  COIRANK_OK = 0,
  COIRANK_E_INVALID_ARGUMENT = 1, /* bad parameter value or null handle */
  COIRANK_E_IO = 2,               /* file could not be read or written */
  COIRANK_E_PARSE = 3,            /* malformed configuration or alias file */
  COIRANK_E_DUPLICATE_ID = 4,     /* two corpus records share a paper id */
  COIRANK_E_EMPTY_CORPUS = 5,     /* no record was admitted */
  COIRANK_E_NOT_CONVERGED = 6,    /* ranking hit max-iters; result is kept */
  COIRANK_E_NOT_FOUND = 7,        /* unknown paper id, rank or k */
  COIRANK_E_INTERNAL = 8
} coirank_status;

typedef enum coirank_algorithm {
  COIRANK_ALGO_PANDORA = 0,
  COIRANK_ALGO_CAJTRANK = 1,
  COIRANK_ALGO_FUTURERANK = 2
} coirank_algorithm;

typedef enum coirank_coi_class {
  COIRANK_CLASS_NORMAL = 0,
  COIRANK_CLASS_POSITIVE_COI = 1,
  COIRANK_CLASS_NEGATIVE_COI = 2,
  COIRANK_CLASS_POSITIVE_SUSPECTED_COI = 3,
  COIRANK_CLASS_NEGATIVE_SUSPECTED_COI = 4
} coirank_coi_class;

typedef enum coirank_artifact {
  COIRANK_ARTIFACT_INGEST_REPORT = 0,    /* JSON */
  COIRANK_ARTIFACT_INDICES_CSV = 1,      /* index,key_a,key_b,count,first_year,last_year */
  COIRANK_ARTIFACT_EDGES_CSV = 2,        /* citing,cited,class,coi_strength,weight */
  COIRANK_ARTIFACT_COI_SUMMARY = 3,      /* JSON */
  COIRANK_ARTIFACT_CREDIT_CSV = 4,       /* paper_id,author_key,share */
  COIRANK_ARTIFACT_RANKING_CSV = 5,      /* rank,paper_id,score,wpr,author,journal,reference */
  COIRANK_ARTIFACT_INSTITUTIONS_CSV = 6, /* key,country,A_m,P_m,COIC,I_I */
  COIRANK_ARTIFACT_COUNTRIES_CSV = 7,    /* key,A_n,P_n,COIC,I_C */
  COIRANK_ARTIFACT_YEARLY_COIC_CSV = 8,  /* country,year,coic */
  COIRANK_ARTIFACT_YEARLY_IMPACT_CSV = 9,/* country,year,impact */
  COIRANK_ARTIFACT_AGGREGATE_SUMMARY = 10,/* JSON */
  COIRANK_ARTIFACT_EVAL_CSV = 11,        /* k,algo,ri,spearman */
  COIRANK_ARTIFACT_MANIFEST = 12         /* JSON */
} coirank_artifact;

typedef struct coirank_config coirank_config;
typedef struct coirank_session coirank_session;

COIRANK_API const char* coirank_version(void);
COIRANK_API const char* coirank_status_string(coirank_status status);
/* Message describing the most recent failure on the calling thread. */
COIRANK_API const char* coirank_last_error(void);
COIRANK_API void coirank_string_free(char* str);

/* ---- configuration ------------------------------------------------------ */

COIRANK_API coirank_status coirank_config_create(coirank_config** out);
COIRANK_API void coirank_config_destroy(coirank_config* config);

/*
 * Sets one run parameter. Keys are the long CLI flag names without the
 * leading dashes ("alpha", "max-iters", "coi-window", ...); values use the
 * CLI spelling. Boolean keys accept true/false/1/0/yes/no.
 */
COIRANK_API coirank_status coirank_config_set(coirank_config* config,
                                              const char* key,
                                              const char* value);
/* Checks the cross-parameter constraints (mixing weights sum to <= 0.85, ...). */
COIRANK_API coirank_status coirank_config_validate(const coirank_config* config);
/*
 * Current value of one parameter in its normalized CLI spelling (for example
 * "pandora,cajtrank" for "algo"). Free with coirank_string_free().
 */
COIRANK_API coirank_status coirank_config_get(const coirank_config* config,
                                              const char* key,
                                              char** out_value);
/* Flat JSON echo of every parameter. Free with coirank_string_free(). */
COIRANK_API coirank_status coirank_config_to_json(const coirank_config* config,
                                                  char** out_json);

/* ---- sessions ----------------------------------------------------------- */

/*
 * Ingests a JSON-Lines corpus. The configuration is validated and copied; the
 * handle may be destroyed afterwards. Record-level problems are kept as
 * warnings; duplicate ids and empty corpora fail the call.
 */
COIRANK_API coirank_status coirank_session_open_file(const coirank_config* config,
                                                     const char* path,
                                                     coirank_session** out);
COIRANK_API coirank_status coirank_session_open_memory(const coirank_config* config,
                                                       const char* data,
                                                       size_t size,
                                                       coirank_session** out);
COIRANK_API void coirank_session_destroy(coirank_session* session);

/* Pipeline stages. Each runs its prerequisites on demand and caches results. */
COIRANK_API coirank_status coirank_session_classify(coirank_session* session);
/* Returns COIRANK_E_NOT_CONVERGED when max-iters was hit; scores are kept. */
COIRANK_API coirank_status coirank_session_rank(coirank_session* session,
                                                coirank_algorithm algo);
COIRANK_API coirank_status coirank_session_aggregate(coirank_session* session);
COIRANK_API coirank_status coirank_session_evaluate(coirank_session* session);

/* Writes one artifact; `algo` is only consulted for RANKING_CSV. */
COIRANK_API coirank_status coirank_session_write(coirank_session* session,
                                                 coirank_artifact artifact,
                                                 coirank_algorithm algo,
                                                 const char* path);

/* ---- queries ------------------------------------------------------------ */

COIRANK_API size_t coirank_session_paper_count(const coirank_session* session);
COIRANK_API size_t coirank_session_edge_count(const coirank_session* session);
COIRANK_API size_t coirank_session_dangling_count(const coirank_session* session);
COIRANK_API size_t coirank_session_record_error_count(const coirank_session* session);

/* Diagnostics accumulated so far (ingest errors, weight-floor hits, ...). */
COIRANK_API size_t coirank_session_warning_count(const coirank_session* session);
COIRANK_API const char* coirank_session_warning(const coirank_session* session,
                                                size_t index);

COIRANK_API coirank_status coirank_session_class_count(coirank_session* session,
                                                       coirank_coi_class cls,
                                                       size_t* out);
COIRANK_API coirank_status coirank_session_edge_class(coirank_session* session,
                                                      const char* citing_id,
                                                      const char* cited_id,
                                                      coirank_coi_class* out_class,
                                                      double* out_weight);
COIRANK_API coirank_status coirank_session_paper_score(coirank_session* session,
                                                       coirank_algorithm algo,
                                                       const char* paper_id,
                                                       double* out);
/* `rank` is 1-based. */
COIRANK_API coirank_status coirank_session_ranked_paper(coirank_session* session,
                                                        coirank_algorithm algo,
                                                        size_t rank,
                                                        const char** out_id);
COIRANK_API coirank_status coirank_session_rank_info(coirank_session* session,
                                                     coirank_algorithm algo,
                                                     int* out_converged,
                                                     int* out_iterations,
                                                     double* out_last_delta);
COIRANK_API coirank_status coirank_session_scholar_impact(coirank_session* session,
                                                          const char* author_key,
                                                          double* out);
COIRANK_API coirank_status coirank_session_eval_metric(coirank_session* session,
                                                       coirank_algorithm algo,
                                                       size_t k,
                                                       double* out_ri,
                                                       double* out_spearman);

/* ---- utilities ---------------------------------------------------------- */

/* Normalized author / affiliation keys. Free with coirank_string_free(). */
COIRANK_API coirank_status coirank_normalize_author(const char* raw, char** out);
COIRANK_API coirank_status coirank_normalize_affiliation(const char* raw, char** out);

/* Writes a synthetic JSON-Lines corpus (deterministic for a given seed). */
COIRANK_API coirank_status coirank_fixture_generate(uint64_t seed,
                                                    size_t n_papers,
                                                    double coi_injection_rate,
                                                    const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COIRANK_COIRANK_H_ */
