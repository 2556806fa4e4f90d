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

#ifndef COIRANK_SESSION_HPP_
#define COIRANK_SESSION_HPP_

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coi_classifier.hpp"
#include "config.hpp"
#include "corpus.hpp"
#include "credit.hpp"
#include "eval.hpp"
#include "graph_index.hpp"
#include "impact.hpp"
#include "rank_engine.hpp"

namespace coirank {

enum class Artifact {
  kIngestReport,
  kIndicesCsv,
  kEdgesCsv,
  kCoiSummary,
  kCreditCsv,
  kRankingCsv,
  kInstitutionsCsv,
  kCountriesCsv,
  kYearlyCoicCsv,
  kYearlyImpactCsv,
  kAggregateSummary,
  kEvalCsv,
  kManifest,
};
inline constexpr int kArtifactCount = 13;

// Conventional file name inside an output directory.
std::string artifact_file_name(Artifact artifact, Algorithm algo = Algorithm::kPandora);

// One corpus plus every derived result, computed on first use and cached.
// Not safe for concurrent use.
class Session {
 public:
  // Validates the configuration, loads the alias file and ingests `data`.
  Session(RunConfig config, std::string data, std::string source = "<memory>");
  static Session open_file(RunConfig config, const std::string& path);

  const RunConfig& config() const { return config_; }
  const Corpus& corpus() const { return corpus_; }
  const std::string& checksum() const { return checksum_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const Indices& indices();
  const Classification& classification();
  const CreditTable& credit();
  const CreditTable& uniform_credit();
  const GroundTruth& ground_truth();
  const RankResult& rank(Algorithm algo);
  const ImpactReport& aggregate();
  const EvalTable& evaluate();

  const ClassifierOptions& classifier_options() const { return classifier_options_; }
  const DecayParams& decay() const { return classifier_options_.decay; }
  // Parameters each algorithm ran with (tuned when grid search is on).
  RankParams params_for(Algorithm algo);

  void write(Artifact artifact, std::ostream& out, Algorithm algo = Algorithm::kPandora);
  // Writes to a file and records it for the manifest.
  void write_file(Artifact artifact, const std::string& path, Algorithm algo = Algorithm::kPandora);

 private:
  void add_warning(std::string message);

  RunConfig config_;
  std::string source_;
  std::string checksum_;
  Corpus corpus_;
  ClassifierOptions classifier_options_;
  unsigned threads_ = 1;
  std::vector<std::string> warnings_;
  std::vector<std::string> artifacts_;

  std::optional<Indices> indices_;
  std::optional<Classification> classification_;
  std::optional<CreditTable> credit_;
  std::optional<CreditTable> uniform_credit_;
  std::optional<GroundTruth> ground_truth_;
  std::array<std::optional<RankResult>, 3> ranks_;
  std::array<std::optional<TuningResult>, 3> tuning_;
  std::optional<ImpactReport> impact_;
  std::optional<EvalTable> eval_;
};

}  // namespace coirank

#endif  // COIRANK_SESSION_HPP_
