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

#ifndef COIRANK_CONFIG_HPP_
#define COIRANK_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "credit.hpp"
#include "eval.hpp"
#include "fixture.hpp"
#include "impact.hpp"
#include "json.hpp"
#include "rank_engine.hpp"

namespace coirank {

// Every tunable of a run. Keys accepted by set() are the long CLI flag names
// without dashes.
struct RunConfig {
  RankParams rank;
  double rho = 0.62;
  int eval_year = 0;   // 0 = newest publication year in the corpus
  int coi_window = 0;  // 0 = whole history up to the citing year
  int max_year = 0;    // ingest upper bound; 0 = current calendar year
  CreditScheme credit_scheme = CreditScheme::kCollective;
  CoiStatsOptions coic;
  EvalOptions eval;
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  bool grid_search = false;
  double grid_step = 0.05;
  std::string alias_file;
  bool dump_indices = false;
  bool dump_credit = false;
  unsigned threads = 0;  // 0 = available cores
  FixtureOptions fixture;

  // Throws kInvalidArgument for unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);
  // Cross-parameter checks that do not need the corpus.
  void validate() const;
  nlohmann::ordered_json to_json() const;

  static const std::vector<std::string_view>& keys();
};

}  // namespace coirank

#endif  // COIRANK_CONFIG_HPP_
