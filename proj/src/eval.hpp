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

#ifndef COIRANK_EVAL_HPP_
#define COIRANK_EVAL_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coi_classifier.hpp"
#include "corpus.hpp"
#include "rank_engine.hpp"

namespace coirank {

// Papers ranked by NORMAL-class citation count, ties by year then id.
struct GroundTruth {
  std::vector<std::size_t> counts;  // indexed by PaperId
  std::vector<PaperId> order;
};

GroundTruth build_ground_truth(const Corpus& corpus, std::span<const WeightedEdge> edges);

// RI of the paper at 1-based position `ro` of a top-k list: 1 + (k - ro) / k.
double paper_ri(std::size_t ro, std::size_t k);
// Σ_{ro=1..k} paper_ri(ro, k) = (3k - 1) / 2.
double max_list_ri(std::size_t k);

// Sum of paper_ri over the papers of ranking[0, k) that also sit in truth[0, k).
// Throws kInvalidArgument when k is 0 or exceeds either list.
double ri_at_k(std::span<const PaperId> ranking, std::span<const PaperId> truth, std::size_t k,
               bool normalized = false);

enum class SpearmanDomain {
  kUnion,         // union of both top-k sets; missing papers get rank |union| + 1
  kIntersection,  // papers in both top-k sets
  kFull,          // every paper, by its position in the full lists
};
std::string_view to_string(SpearmanDomain d);
std::optional<SpearmanDomain> spearman_domain_from_string(std::string_view s);

struct SpearmanResult {
  double value = 0.0;
  // Fewer than two papers or a constant rank vector; value is then 0.
  bool degenerate = false;
};

// Pearson correlation of the rank positions of both lists over `domain`.
SpearmanResult spearman_at_k(std::span<const PaperId> ranking, std::span<const PaperId> truth, std::size_t k,
                             SpearmanDomain domain = SpearmanDomain::kUnion);

// Pearson correlation of two equally long samples; nullopt when degenerate.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

struct EvalOptions {
  std::size_t k_min = 10;
  std::size_t k_max = 300;
  std::size_t k_step = 10;
  bool ri_normalized = false;
  SpearmanDomain domain = SpearmanDomain::kUnion;

  void validate() const;
};

// k_min, k_min + k_step, ... up to k_max, dropping values above `n`.
std::vector<std::size_t> k_values(const EvalOptions& options, std::size_t n,
                                  std::vector<std::string>* warnings = nullptr);

struct EvalRow {
  std::size_t k = 0;
  Algorithm algorithm = Algorithm::kPandora;
  double ri = 0.0;
  double spearman = 0.0;
};

struct EvalTable {
  std::vector<EvalRow> rows;  // k ascending, then algorithm order of the input
  std::vector<std::string> warnings;

  const EvalRow* find(Algorithm algo, std::size_t k) const;
};

EvalTable compare_algorithms(const Corpus& corpus, const GroundTruth& truth,
                             std::span<const RankResult* const> results, const EvalOptions& options,
                             unsigned threads = 1);

// k,algo,ri,spearman
void write_eval_csv(std::ostream& out, const EvalTable& table);

// Produces a full ranking for one parameter set.
using Ranker = std::function<std::vector<PaperId>(const RankParams&)>;

struct TuningResult {
  RankParams params;
  double objective = 0.0;  // mean normalized RI over the k grid
  std::size_t evaluated = 0;
};

// Exhaustive search over (alpha, beta, gamma, delta) on a `step` simplex grid
// summing to the base mixing mass. With `fix_gamma_zero` the journal weight is
// pinned to 0. Ties keep the first point in lexicographic (alpha, beta, gamma)
// order.
TuningResult grid_search(const Ranker& ranker, const GroundTruth& truth, const RankParams& base,
                         std::span<const std::size_t> ks, bool fix_gamma_zero, double step = 0.05);

}  // namespace coirank

#endif  // COIRANK_EVAL_HPP_
