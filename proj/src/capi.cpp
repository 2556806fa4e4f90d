// Copyright 2026 The coirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coirank/coirank.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "config.hpp"
#include "fixture.hpp"
#include "normalize.hpp"
#include "session.hpp"

struct coirank_config {
  coirank::RunConfig config;
};

struct coirank_session {
  explicit coirank_session(coirank::Session s) : session(std::move(s)) {}
  coirank::Session session;
};

namespace {

thread_local std::string g_last_error;

coirank_status to_status(coirank::ErrorCode code) {
  switch (code) {
    case coirank::ErrorCode::kInvalidArgument: return COIRANK_E_INVALID_ARGUMENT;
    case coirank::ErrorCode::kIo: return COIRANK_E_IO;
    case coirank::ErrorCode::kParse: return COIRANK_E_PARSE;
    case coirank::ErrorCode::kDuplicateId: return COIRANK_E_DUPLICATE_ID;
    case coirank::ErrorCode::kEmptyCorpus: return COIRANK_E_EMPTY_CORPUS;
    case coirank::ErrorCode::kNotFound: return COIRANK_E_NOT_FOUND;
  }
  return COIRANK_E_INTERNAL;
}

coirank_status fail(coirank_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
coirank_status guarded(F&& body) {
  try {
    return body();
  } catch (const coirank::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COIRANK_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COIRANK_E_INTERNAL, e.what());
  } catch (...) {
    return fail(COIRANK_E_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_algorithm(coirank_algorithm algo) {
  return algo == COIRANK_ALGO_PANDORA || algo == COIRANK_ALGO_CAJTRANK || algo == COIRANK_ALGO_FUTURERANK;
}

coirank::Algorithm to_algorithm(coirank_algorithm algo) { return static_cast<coirank::Algorithm>(algo); }

#define COIRANK_REQUIRE(cond, message) \
  do {                                 \
    if (!(cond)) return fail(COIRANK_E_INVALID_ARGUMENT, message); \
  } while (0)

}  // namespace

extern "C" {

const char* coirank_version(void) { return "0.1.0"; }

const char* coirank_status_string(coirank_status status) {
  switch (status) {
    case COIRANK_OK: return "ok";
    case COIRANK_E_INVALID_ARGUMENT: return "invalid argument";
    case COIRANK_E_IO: return "i/o error";
    case COIRANK_E_PARSE: return "parse error";
    case COIRANK_E_DUPLICATE_ID: return "duplicate paper id";
    case COIRANK_E_EMPTY_CORPUS: return "empty corpus";
    case COIRANK_E_NOT_CONVERGED: return "ranking did not converge";
    case COIRANK_E_NOT_FOUND: return "not found";
    case COIRANK_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* coirank_last_error(void) { return g_last_error.c_str(); }

void coirank_string_free(char* str) { std::free(str); }

coirank_status coirank_config_create(coirank_config** out) {
  COIRANK_REQUIRE(out != nullptr, "out must not be null");
  return guarded([&] {
    *out = new coirank_config{};
    return COIRANK_OK;
  });
}

void coirank_config_destroy(coirank_config* config) { delete config; }

coirank_status coirank_config_set(coirank_config* config, const char* key, const char* value) {
  COIRANK_REQUIRE(config != nullptr && key != nullptr && value != nullptr, "config, key and value are required");
  return guarded([&] {
    config->config.set(key, value);
    return COIRANK_OK;
  });
}

coirank_status coirank_config_validate(const coirank_config* config) {
  COIRANK_REQUIRE(config != nullptr, "config must not be null");
  return guarded([&] {
    config->config.validate();
    return COIRANK_OK;
  });
}

coirank_status coirank_config_get(const coirank_config* config, const char* key, char** out_value) {
  COIRANK_REQUIRE(config != nullptr && key != nullptr && out_value != nullptr,
                  "config, key and out_value are required");
  return guarded([&] {
    const auto json = config->config.to_json();
    const auto it = json.find(key);
    if (it == json.end()) return fail(COIRANK_E_INVALID_ARGUMENT, std::string("unknown configuration key '") + key + "'");
    *out_value = copy_string(it->is_string() ? it->get<std::string>() : it->dump());
    return COIRANK_OK;
  });
}

coirank_status coirank_config_to_json(const coirank_config* config, char** out_json) {
  COIRANK_REQUIRE(config != nullptr && out_json != nullptr, "config and out_json are required");
  return guarded([&] {
    *out_json = copy_string(config->config.to_json().dump());
    return COIRANK_OK;
  });
}

coirank_status coirank_session_open_file(const coirank_config* config, const char* path, coirank_session** out) {
  COIRANK_REQUIRE(config != nullptr && path != nullptr && out != nullptr, "config, path and out are required");
  return guarded([&] {
    coirank::RunConfig rc = config->config;
    *out = new coirank_session(coirank::Session::open_file(std::move(rc), path));
    return COIRANK_OK;
  });
}

coirank_status coirank_session_open_memory(const coirank_config* config, const char* data, size_t size,
                                           coirank_session** out) {
  COIRANK_REQUIRE(config != nullptr && (data != nullptr || size == 0) && out != nullptr,
                  "config, data and out are required");
  return guarded([&] {
    coirank::RunConfig rc = config->config;
    *out = new coirank_session(coirank::Session(std::move(rc), std::string(data == nullptr ? "" : data, size)));
    return COIRANK_OK;
  });
}

void coirank_session_destroy(coirank_session* session) { delete session; }

coirank_status coirank_session_classify(coirank_session* session) {
  COIRANK_REQUIRE(session != nullptr, "session must not be null");
  return guarded([&] {
    session->session.classification();
    return COIRANK_OK;
  });
}

coirank_status coirank_session_rank(coirank_session* session, coirank_algorithm algo) {
  COIRANK_REQUIRE(session != nullptr && valid_algorithm(algo), "session and a known algorithm are required");
  return guarded([&] {
    const auto& r = session->session.rank(to_algorithm(algo));
    if (!r.state.converged) {
      return fail(COIRANK_E_NOT_CONVERGED,
                  "ranking hit max-iters before max |dS| dropped below epsilon");
    }
    return COIRANK_OK;
  });
}

coirank_status coirank_session_aggregate(coirank_session* session) {
  COIRANK_REQUIRE(session != nullptr, "session must not be null");
  return guarded([&] {
    session->session.aggregate();
    return COIRANK_OK;
  });
}

coirank_status coirank_session_evaluate(coirank_session* session) {
  COIRANK_REQUIRE(session != nullptr, "session must not be null");
  return guarded([&] {
    session->session.evaluate();
    return COIRANK_OK;
  });
}

coirank_status coirank_session_write(coirank_session* session, coirank_artifact artifact, coirank_algorithm algo,
                                     const char* path) {
  COIRANK_REQUIRE(session != nullptr && path != nullptr, "session and path are required");
  COIRANK_REQUIRE(static_cast<int>(artifact) >= 0 && static_cast<int>(artifact) < coirank::kArtifactCount,
                  "unknown artifact");
  COIRANK_REQUIRE(valid_algorithm(algo), "unknown algorithm");
  return guarded([&] {
    session->session.write_file(static_cast<coirank::Artifact>(artifact), path, to_algorithm(algo));
    return COIRANK_OK;
  });
}

size_t coirank_session_paper_count(const coirank_session* session) {
  return session == nullptr ? 0 : session->session.corpus().paper_count();
}

size_t coirank_session_edge_count(const coirank_session* session) {
  return session == nullptr ? 0 : session->session.corpus().edges().size();
}

size_t coirank_session_dangling_count(const coirank_session* session) {
  return session == nullptr ? 0 : session->session.corpus().dangling().size();
}

size_t coirank_session_record_error_count(const coirank_session* session) {
  return session == nullptr ? 0 : session->session.corpus().errors().size();
}

size_t coirank_session_warning_count(const coirank_session* session) {
  return session == nullptr ? 0 : session->session.warnings().size();
}

const char* coirank_session_warning(const coirank_session* session, size_t index) {
  if (session == nullptr || index >= session->session.warnings().size()) return nullptr;
  return session->session.warnings()[index].c_str();
}

coirank_status coirank_session_class_count(coirank_session* session, coirank_coi_class cls, size_t* out) {
  COIRANK_REQUIRE(session != nullptr && out != nullptr, "session and out are required");
  COIRANK_REQUIRE(static_cast<int>(cls) >= 0 && static_cast<std::size_t>(cls) < coirank::kCoiClassCount,
                  "unknown COI class");
  return guarded([&] {
    *out = session->session.classification().summary.edges[static_cast<std::size_t>(cls)];
    return COIRANK_OK;
  });
}

coirank_status coirank_session_edge_class(coirank_session* session, const char* citing_id, const char* cited_id,
                                          coirank_coi_class* out_class, double* out_weight) {
  COIRANK_REQUIRE(session != nullptr && citing_id != nullptr && cited_id != nullptr,
                  "session and both paper ids are required");
  return guarded([&] {
    const auto& corpus = session->session.corpus();
    const auto citing = corpus.find(citing_id);
    const auto cited = corpus.find(cited_id);
    if (!citing || !cited) return fail(COIRANK_E_NOT_FOUND, "unknown paper id");
    for (const auto& e : session->session.classification().edges) {
      if (e.citing == *citing && e.cited == *cited) {
        if (out_class != nullptr) *out_class = static_cast<coirank_coi_class>(e.coi_class);
        if (out_weight != nullptr) *out_weight = e.weight;
        return COIRANK_OK;
      }
    }
    return fail(COIRANK_E_NOT_FOUND, std::string("no citation from '") + citing_id + "' to '" + cited_id + "'");
  });
}

coirank_status coirank_session_paper_score(coirank_session* session, coirank_algorithm algo, const char* paper_id,
                                           double* out) {
  COIRANK_REQUIRE(session != nullptr && paper_id != nullptr && out != nullptr && valid_algorithm(algo),
                  "session, algorithm, paper id and out are required");
  return guarded([&] {
    const auto p = session->session.corpus().find(paper_id);
    if (!p) return fail(COIRANK_E_NOT_FOUND, std::string("unknown paper id '") + paper_id + "'");
    *out = session->session.rank(to_algorithm(algo)).state.scores[p->index()];
    return COIRANK_OK;
  });
}

coirank_status coirank_session_ranked_paper(coirank_session* session, coirank_algorithm algo, size_t rank,
                                            const char** out_id) {
  COIRANK_REQUIRE(session != nullptr && out_id != nullptr && valid_algorithm(algo),
                  "session, algorithm and out_id are required");
  return guarded([&] {
    const auto& order = session->session.rank(to_algorithm(algo)).order;
    if (rank == 0 || rank > order.size()) return fail(COIRANK_E_NOT_FOUND, "rank out of range");
    *out_id = session->session.corpus().paper(order[rank - 1]).id.c_str();
    return COIRANK_OK;
  });
}

coirank_status coirank_session_rank_info(coirank_session* session, coirank_algorithm algo, int* out_converged,
                                         int* out_iterations, double* out_last_delta) {
  COIRANK_REQUIRE(session != nullptr && valid_algorithm(algo), "session and a known algorithm are required");
  return guarded([&] {
    const auto& state = session->session.rank(to_algorithm(algo)).state;
    if (out_converged != nullptr) *out_converged = state.converged ? 1 : 0;
    if (out_iterations != nullptr) *out_iterations = state.iterations;
    if (out_last_delta != nullptr) *out_last_delta = state.last_delta;
    return COIRANK_OK;
  });
}

coirank_status coirank_session_scholar_impact(coirank_session* session, const char* author_key, double* out) {
  COIRANK_REQUIRE(session != nullptr && author_key != nullptr && out != nullptr,
                  "session, author key and out are required");
  return guarded([&] {
    const auto a = session->session.corpus().find_author(author_key);
    if (!a) return fail(COIRANK_E_NOT_FOUND, std::string("unknown author '") + author_key + "'");
    *out = session->session.aggregate().scholar[a->index()];
    return COIRANK_OK;
  });
}

coirank_status coirank_session_eval_metric(coirank_session* session, coirank_algorithm algo, size_t k,
                                           double* out_ri, double* out_spearman) {
  COIRANK_REQUIRE(session != nullptr && valid_algorithm(algo), "session and a known algorithm are required");
  return guarded([&] {
    const auto* row = session->session.evaluate().find(to_algorithm(algo), k);
    if (row == nullptr) return fail(COIRANK_E_NOT_FOUND, "no evaluation row for that algorithm and k");
    if (out_ri != nullptr) *out_ri = row->ri;
    if (out_spearman != nullptr) *out_spearman = row->spearman;
    return COIRANK_OK;
  });
}

coirank_status coirank_normalize_author(const char* raw, char** out) {
  COIRANK_REQUIRE(raw != nullptr && out != nullptr, "raw and out are required");
  return guarded([&] {
    *out = copy_string(coirank::normalize_author(raw));
    return COIRANK_OK;
  });
}

coirank_status coirank_normalize_affiliation(const char* raw, char** out) {
  COIRANK_REQUIRE(raw != nullptr && out != nullptr, "raw and out are required");
  return guarded([&] {
    *out = copy_string(coirank::normalize_affiliation(raw));
    return COIRANK_OK;
  });
}

coirank_status coirank_fixture_generate(uint64_t seed, size_t n_papers, double coi_injection_rate, const char* path) {
  COIRANK_REQUIRE(path != nullptr, "path must not be null");
  return guarded([&] {
    coirank::FixtureOptions options;
    options.seed = seed;
    options.papers = n_papers;
    options.rate = coi_injection_rate;
    options.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return fail(COIRANK_E_IO, std::string("cannot write '") + path + "'");
    coirank::write_fixture(out, options);
    out.close();
    if (!out) return fail(COIRANK_E_IO, std::string("failed writing '") + path + "'");
    return COIRANK_OK;
  });
}

}  // extern "C"
