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

#include "export.hpp"

#include <chrono>
#include <numeric>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <openssl/evp.h>

namespace coirank {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string utc_timestamp() {
  const auto now = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(now)));
}

nlohmann::ordered_json ingest_report_json(const Corpus& corpus, std::string_view checksum) {
  nlohmann::ordered_json j;
  j["sha256"] = checksum;
  j["papers"] = corpus.paper_count();
  j["authors"] = corpus.author_count();
  j["institutions"] = corpus.institution_count();
  j["countries"] = corpus.country_count();
  j["journals"] = corpus.journal_count();
  j["edges"] = corpus.edges().size();
  j["min_year"] = corpus.min_year();
  j["max_year"] = corpus.max_year();

  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const RecordError& e : corpus.errors()) errors.push_back({{"line", e.line}, {"message", e.message}});
  j["record_errors"] = std::move(errors);

  nlohmann::ordered_json dangling = nlohmann::ordered_json::array();
  for (const DanglingReference& d : corpus.dangling()) {
    dangling.push_back({{"citing", corpus.paper(d.citing).id}, {"target", d.target}});
  }
  j["dangling_references"] = std::move(dangling);

  nlohmann::ordered_json anomalies = nlohmann::ordered_json::array();
  for (const Citation& c : corpus.temporal_anomalies()) {
    anomalies.push_back({{"citing", corpus.paper(c.citing).id}, {"cited", corpus.paper(c.cited).id}});
  }
  j["temporal_anomalies"] = std::move(anomalies);
  j["warnings"] = corpus.warnings();
  return j;
}

nlohmann::ordered_json coi_summary_json(const Classification& classification, const ClassifierOptions& options) {
  const ClassSummary& s = classification.summary;
  nlohmann::ordered_json j;
  j["rho"] = options.decay.rho;
  j["current_year"] = options.decay.current_year;
  j["coi_window"] = options.coi_window;
  j["edges_total"] = classification.edges.size();
  nlohmann::ordered_json classes = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < kCoiClassCount; ++c) {
    classes[std::string(to_string(static_cast<CoiClass>(c)))] = {
        {"edges", s.edges[c]}, {"author_pairs", s.author_pairs[c]}, {"papers", s.papers[c]}};
  }
  j["classes"] = std::move(classes);
  j["weight_floor"] = kMinEdgeWeight;
  j["weight_floor_hits"] = s.floor_hits;
  return j;
}

nlohmann::ordered_json aggregate_summary_json(const Corpus& corpus, const ImpactReport& report,
                                              const CoiStatsOptions& options) {
  nlohmann::ordered_json j;
  j["total_paper_score"] = report.total_paper_score;
  j["total_scholar_impact"] = std::accumulate(report.scholar.begin(), report.scholar.end(), 0.0);
  j["unaffiliated_impact"] = report.unaffiliated.impact;
  j["unaffiliated_coic"] = report.unaffiliated.coic;
  j["unknown_country_impact"] = report.unknown_country.impact;
  j["institutions"] = corpus.institution_count();
  j["countries"] = corpus.country_count();
  j["coic_attribution"] = to_string(options.attribution);
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < kCoiClassCount; ++c) {
    if (options.classes[c]) classes.push_back(to_string(static_cast<CoiClass>(c)));
  }
  j["coic_classes"] = std::move(classes);
  std::size_t coic_total = report.unknown_country.coic;
  for (const GroupStats& g : report.countries) coic_total += g.coic;
  j["coic_total"] = coic_total;
  return j;
}

}  // namespace coirank
