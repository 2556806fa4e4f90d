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

#ifndef COIRANK_EXPORT_HPP_
#define COIRANK_EXPORT_HPP_

#include <string>
#include <string_view>

#include "coi_classifier.hpp"
#include "corpus.hpp"
#include "impact.hpp"
#include "json.hpp"

namespace coirank {

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

// ISO-8601 UTC timestamp of the current time.
std::string utc_timestamp();

nlohmann::ordered_json ingest_report_json(const Corpus& corpus, std::string_view checksum);
nlohmann::ordered_json coi_summary_json(const Classification& classification, const ClassifierOptions& options);
nlohmann::ordered_json aggregate_summary_json(const Corpus& corpus, const ImpactReport& report,
                                              const CoiStatsOptions& options);

}  // namespace coirank

#endif  // COIRANK_EXPORT_HPP_
