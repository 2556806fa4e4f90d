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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include <gtest/gtest.h>

#include "coirank/coirank.h"

namespace {

const char* const kFourCases = COIRANK_DATA_DIR "/coi_four_cases.jsonl";

struct ConfigDeleter {
  void operator()(coirank_config* c) const { coirank_config_destroy(c); }
};
struct SessionDeleter {
  void operator()(coirank_session* s) const { coirank_session_destroy(s); }
};
using ConfigPtr = std::unique_ptr<coirank_config, ConfigDeleter>;
using SessionPtr = std::unique_ptr<coirank_session, SessionDeleter>;

ConfigPtr make_config() {
  coirank_config* raw = nullptr;
  EXPECT_EQ(coirank_config_create(&raw), COIRANK_OK);
  EXPECT_EQ(coirank_config_set(raw, "max-year", "2030"), COIRANK_OK);
  EXPECT_EQ(coirank_config_set(raw, "k-min", "2"), COIRANK_OK);
  EXPECT_EQ(coirank_config_set(raw, "k-max", "10"), COIRANK_OK);
  EXPECT_EQ(coirank_config_set(raw, "k-step", "2"), COIRANK_OK);
  return ConfigPtr(raw);
}

SessionPtr open_four_cases(const coirank_config* config) {
  coirank_session* raw = nullptr;
  EXPECT_EQ(coirank_session_open_file(config, kFourCases, &raw), COIRANK_OK) << coirank_last_error();
  return SessionPtr(raw);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  coirank_string_free(s);
  return out;
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_NE(std::string(coirank_version()), "");
  EXPECT_STREQ(coirank_status_string(COIRANK_OK), "ok");
  EXPECT_NE(std::string(coirank_status_string(COIRANK_E_EMPTY_CORPUS)), "");
  EXPECT_NE(std::string(coirank_status_string(static_cast<coirank_status>(99))), "");
}

TEST(CApi, ConfigSetGetAndErrors) {
  ConfigPtr config = make_config();
  EXPECT_EQ(coirank_config_set(config.get(), "algo", "cajtrank,pandora"), COIRANK_OK);
  char* value = nullptr;
  ASSERT_EQ(coirank_config_get(config.get(), "algo", &value), COIRANK_OK);
  EXPECT_EQ(take(value), "cajtrank,pandora");
  ASSERT_EQ(coirank_config_get(config.get(), "max-iters", &value), COIRANK_OK);
  EXPECT_EQ(take(value), "200");
  EXPECT_EQ(coirank_config_get(config.get(), "bogus", &value), COIRANK_E_INVALID_ARGUMENT);

  EXPECT_EQ(coirank_config_set(config.get(), "alpha", "abc"), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_NE(std::string(coirank_last_error()).find("alpha"), std::string::npos);
  EXPECT_EQ(coirank_config_set(config.get(), "nope", "1"), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_EQ(coirank_config_set(nullptr, "alpha", "0.1"), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_EQ(coirank_config_set(config.get(), nullptr, "0.1"), COIRANK_E_INVALID_ARGUMENT);

  EXPECT_EQ(coirank_config_validate(config.get()), COIRANK_OK);
  EXPECT_EQ(coirank_config_set(config.get(), "alpha", "0.8"), COIRANK_OK);
  EXPECT_EQ(coirank_config_validate(config.get()), COIRANK_E_INVALID_ARGUMENT);

  char* json = nullptr;
  ASSERT_EQ(coirank_config_to_json(config.get(), &json), COIRANK_OK);
  EXPECT_NE(take(json).find("\"alpha\":0.8"), std::string::npos);
}

TEST(CApi, FourCasePipeline) {
  ConfigPtr config = make_config();
  SessionPtr s = open_four_cases(config.get());
  ASSERT_TRUE(s);
  config.reset();  // the session keeps its own copy
  EXPECT_EQ(coirank_session_paper_count(s.get()), 12u);
  EXPECT_EQ(coirank_session_edge_count(s.get()), 8u);
  EXPECT_EQ(coirank_session_classify(s.get()), COIRANK_OK);

  struct Case {
    const char* citing;
    const char* cited;
    coirank_coi_class cls;
  };
  const Case cases[] = {{"A3", "A2", COIRANK_CLASS_POSITIVE_COI},
                        {"B3", "B2", COIRANK_CLASS_NEGATIVE_COI},
                        {"C2", "C1", COIRANK_CLASS_POSITIVE_SUSPECTED_COI},
                        {"D2", "D1", COIRANK_CLASS_NEGATIVE_SUSPECTED_COI},
                        {"A4", "A2", COIRANK_CLASS_NORMAL}};
  for (const Case& c : cases) {
    coirank_coi_class cls = COIRANK_CLASS_NORMAL;
    double weight = 0.0;
    ASSERT_EQ(coirank_session_edge_class(s.get(), c.citing, c.cited, &cls, &weight), COIRANK_OK);
    EXPECT_EQ(cls, c.cls) << c.citing << "->" << c.cited;
    if (cls == COIRANK_CLASS_NEGATIVE_COI) {
      EXPECT_NEAR(weight, 0.28938, 1e-5);
    }
  }
  coirank_coi_class cls;
  double weight;
  EXPECT_EQ(coirank_session_edge_class(s.get(), "A1", "D1", &cls, &weight), COIRANK_E_NOT_FOUND);

  size_t normal = 0;
  ASSERT_EQ(coirank_session_class_count(s.get(), COIRANK_CLASS_NORMAL, &normal), COIRANK_OK);
  EXPECT_EQ(normal, 4u);

  for (const auto algo : {COIRANK_ALGO_PANDORA, COIRANK_ALGO_CAJTRANK, COIRANK_ALGO_FUTURERANK}) {
    EXPECT_EQ(coirank_session_rank(s.get(), algo), COIRANK_OK);
    int converged = 0, iterations = 0;
    double delta = 1.0;
    ASSERT_EQ(coirank_session_rank_info(s.get(), algo, &converged, &iterations, &delta), COIRANK_OK);
    EXPECT_EQ(converged, 1);
    EXPECT_GT(iterations, 0);
    const char* top = nullptr;
    ASSERT_EQ(coirank_session_ranked_paper(s.get(), algo, 1, &top), COIRANK_OK);
    double score = 0.0;
    ASSERT_EQ(coirank_session_paper_score(s.get(), algo, top, &score), COIRANK_OK);
    EXPECT_GT(score, 0.0);
  }
  const char* id = nullptr;
  EXPECT_EQ(coirank_session_ranked_paper(s.get(), COIRANK_ALGO_PANDORA, 0, &id), COIRANK_E_NOT_FOUND);
  EXPECT_EQ(coirank_session_ranked_paper(s.get(), COIRANK_ALGO_PANDORA, 13, &id), COIRANK_E_NOT_FOUND);
  double score = 0.0;
  EXPECT_EQ(coirank_session_paper_score(s.get(), COIRANK_ALGO_PANDORA, "Z9", &score), COIRANK_E_NOT_FOUND);

  EXPECT_EQ(coirank_session_aggregate(s.get()), COIRANK_OK);
  double impact = 0.0;
  ASSERT_EQ(coirank_session_scholar_impact(s.get(), "archer, a.", &impact), COIRANK_OK);
  EXPECT_GT(impact, 0.0);
  EXPECT_EQ(coirank_session_scholar_impact(s.get(), "nobody, n.", &impact), COIRANK_E_NOT_FOUND);

  EXPECT_EQ(coirank_session_evaluate(s.get()), COIRANK_OK);
  double ri = -1.0, rho = -2.0;
  ASSERT_EQ(coirank_session_eval_metric(s.get(), COIRANK_ALGO_CAJTRANK, 4, &ri, &rho), COIRANK_OK);
  EXPECT_GE(ri, 0.0);
  EXPECT_GE(rho, -1.0);
  EXPECT_LE(rho, 1.0);
  EXPECT_EQ(coirank_session_eval_metric(s.get(), COIRANK_ALGO_CAJTRANK, 3, &ri, &rho), COIRANK_E_NOT_FOUND);
}

TEST(CApi, WritesArtifacts) {
  const auto dir = std::filesystem::temp_directory_path() / "coirank_capi_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ConfigPtr config = make_config();
  SessionPtr s = open_four_cases(config.get());
  for (int a = COIRANK_ARTIFACT_INGEST_REPORT; a <= COIRANK_ARTIFACT_MANIFEST; ++a) {
    const auto path = dir / ("artifact_" + std::to_string(a));
    ASSERT_EQ(coirank_session_write(s.get(), static_cast<coirank_artifact>(a), COIRANK_ALGO_PANDORA,
                                    path.string().c_str()),
              COIRANK_OK)
        << coirank_last_error();
    EXPECT_GT(std::filesystem::file_size(path), 0u);
  }
  EXPECT_EQ(coirank_session_write(s.get(), COIRANK_ARTIFACT_EDGES_CSV, COIRANK_ALGO_PANDORA,
                                  (dir / "missing" / "edges.csv").string().c_str()),
            COIRANK_E_IO);
  EXPECT_EQ(coirank_session_write(s.get(), static_cast<coirank_artifact>(42), COIRANK_ALGO_PANDORA,
                                  (dir / "x").string().c_str()),
            COIRANK_E_INVALID_ARGUMENT);
  std::filesystem::remove_all(dir);
}

TEST(CApi, OpenErrors) {
  ConfigPtr config = make_config();
  coirank_session* s = nullptr;
  EXPECT_EQ(coirank_session_open_memory(config.get(), "", 0, &s), COIRANK_E_EMPTY_CORPUS);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(coirank_session_open_file(config.get(), "/nonexistent/x.jsonl", &s), COIRANK_E_IO);
  const std::string dup = "{\"id\":\"p\",\"year\":2000,\"authors\":[{\"name\":\"Ann Lee\"}]}\n"
                          "{\"id\":\"p\",\"year\":2001,\"authors\":[{\"name\":\"Bo Kim\"}]}\n";
  EXPECT_EQ(coirank_session_open_memory(config.get(), dup.data(), dup.size(), &s), COIRANK_E_DUPLICATE_ID);
  EXPECT_NE(std::string(coirank_last_error()).find("duplicate"), std::string::npos);
  EXPECT_EQ(coirank_session_open_memory(nullptr, dup.data(), dup.size(), &s), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_EQ(coirank_config_set(config.get(), "alias-file", "/nonexistent/aliases.txt"), COIRANK_OK);
  EXPECT_EQ(coirank_session_open_file(config.get(), kFourCases, &s), COIRANK_E_IO);
}

TEST(CApi, WarningsAndNonConvergence) {
  ConfigPtr config = make_config();
  ASSERT_EQ(coirank_config_set(config.get(), "max-iters", "1"), COIRANK_OK);
  const std::string data = "{\"id\":\"p\",\"year\":2000,\"authors\":[{\"name\":\"Ann Lee\"}]}\n"
                           "{\"id\":\"q\",\"year\":2001,\"authors\":[{\"name\":\"Bo Kim\"}],\"references\":[\"p\",\"zz\"]}\n"
                           "not json\n";
  coirank_session* raw = nullptr;
  ASSERT_EQ(coirank_session_open_memory(config.get(), data.data(), data.size(), &raw), COIRANK_OK);
  SessionPtr s(raw);
  EXPECT_EQ(coirank_session_record_error_count(s.get()), 1u);
  EXPECT_EQ(coirank_session_dangling_count(s.get()), 1u);
  const std::size_t before = coirank_session_warning_count(s.get());
  EXPECT_GE(before, 2u);
  EXPECT_NE(std::string(coirank_session_warning(s.get(), 0)).find("line 3"), std::string::npos);
  EXPECT_EQ(coirank_session_warning(s.get(), 1000), nullptr);
  EXPECT_EQ(coirank_session_rank(s.get(), COIRANK_ALGO_PANDORA), COIRANK_E_NOT_CONVERGED);
  int converged = 1, iterations = 0;
  double delta = 0.0;
  ASSERT_EQ(coirank_session_rank_info(s.get(), COIRANK_ALGO_PANDORA, &converged, &iterations, &delta), COIRANK_OK);
  EXPECT_EQ(converged, 0);
  EXPECT_EQ(iterations, 1);
  EXPECT_GT(coirank_session_warning_count(s.get()), before);
}

TEST(CApi, NormalizeAndFixture) {
  char* out = nullptr;
  ASSERT_EQ(coirank_normalize_author("Smith, A.B.", &out), COIRANK_OK);
  EXPECT_EQ(take(out), "smith, a.b.");
  EXPECT_EQ(coirank_normalize_author("   ", &out), COIRANK_E_INVALID_ARGUMENT);
  ASSERT_EQ(coirank_normalize_affiliation("  Dept. of Physics,  MIT ", &out), COIRANK_OK);
  EXPECT_FALSE(take(out).empty());

  const auto path = std::filesystem::temp_directory_path() / "coirank_capi_fixture.jsonl";
  ASSERT_EQ(coirank_fixture_generate(7, 50, 0.2, path.string().c_str()), COIRANK_OK);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 50u);
  EXPECT_EQ(coirank_fixture_generate(7, 50, 3.0, path.string().c_str()), COIRANK_E_INVALID_ARGUMENT);
  std::filesystem::remove(path);
}

TEST(CApi, NullHandlesAreRejected) {
  EXPECT_EQ(coirank_session_paper_count(nullptr), 0u);
  EXPECT_EQ(coirank_session_classify(nullptr), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_EQ(coirank_session_rank(nullptr, COIRANK_ALGO_PANDORA), COIRANK_E_INVALID_ARGUMENT);
  EXPECT_EQ(coirank_config_create(nullptr), COIRANK_E_INVALID_ARGUMENT);
  coirank_session_destroy(nullptr);
  coirank_config_destroy(nullptr);
  coirank_string_free(nullptr);
}

}  // namespace
