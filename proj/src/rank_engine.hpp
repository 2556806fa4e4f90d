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

#ifndef COIRANK_RANK_ENGINE_HPP_
#define COIRANK_RANK_ENGINE_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "coi_classifier.hpp"
#include "corpus.hpp"
#include "credit.hpp"

namespace coirank {

enum class Algorithm { kPandora = 0, kCajtRank = 1, kFutureRank = 2 };
inline constexpr std::array<Algorithm, 3> kAllAlgorithms = {Algorithm::kPandora, Algorithm::kCajtRank,
                                                             Algorithm::kFutureRank};

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> algorithm_from_string(std::string_view s);

// Upper bound on alpha + beta + gamma + delta; the rest is random-jump mass.
inline constexpr double kMaxMixingMass = 0.85;

struct RankParams {
  double alpha = 0.40;  // weighted PageRank
  double beta = 0.15;   // authors
  double gamma = 0.15;  // journal
  double delta = 0.15;  // references
  double epsilon = 1e-4;
  int max_iters = 200;

  double mixing_mass() const { return alpha + beta + gamma + delta; }
  double random_jump() const { return 1.0 - mixing_mass(); }
  // Throws kInvalidArgument on out-of-range values.
  void validate() const;
};

// Citation graph as seen by the iteration: weighted in-links per paper and
// the unweighted out-degree |OUT(P_j)| of each citing paper.
class RankGraph {
 public:
  struct InLink {
    PaperId citer;
    double weight;
  };

  static RankGraph from_edges(const Corpus& corpus, std::span<const WeightedEdge> edges);
  // Every citation at weight 1.
  static RankGraph unit(const Corpus& corpus);

  std::size_t size() const { return in_.size(); }
  std::span<const InLink> in_links(PaperId p) const { return in_[p.index()]; }
  std::size_t out_degree(PaperId p) const { return out_degree_[p.index()]; }

  // Lowers the weight of one existing in-link; used by property tests.
  void set_weight(PaperId citing, PaperId cited, double weight);

 private:
  std::vector<std::vector<InLink>> in_;
  std::vector<std::size_t> out_degree_;
};

struct ComponentScores {
  std::vector<double> wpr;
  std::vector<double> author;
  std::vector<double> journal;
  std::vector<double> reference;
};

struct RankState {
  std::vector<double> scores;
  ComponentScores components;  // from the last iteration
  int iterations = 0;
  double last_delta = 0.0;
  bool converged = false;
  std::vector<double> delta_trace;  // max |ΔS| per iteration
};

struct RankResult {
  Algorithm algorithm = Algorithm::kPandora;
  RankParams params;
  RankState state;
  std::vector<PaperId> order;  // best first
};

// Σ_{j -> i} W_{j,i} / |OUT(P_j)| · S(P_j); the score of papers without
// in-corpus references is spread uniformly over all papers.
std::vector<double> weighted_pagerank_step(const RankGraph& graph, std::span<const double> scores);

// Author hub h(A) = Σ_{P_k by A} CreditShare(P_k, A) · S(P_k) / |papers(A)|.
// Author(P_i) = Σ_{A on P_i} h(A) / T(A), T(A) = Σ_A h(A).
std::vector<double> author_score_step(const Corpus& corpus, const CreditTable& credit,
                                      std::span<const double> scores);

// Journal hub h(J) = mean S over the journal's papers; Journal(P_i) = h(J(P_i)) / T(J).
std::vector<double> journal_score_step(const Corpus& corpus, std::span<const double> scores);

// Paper hub h(P_j) = mean S over P_j's references;
// Reference(P_i) = Σ_{P_j cites P_i} h(P_j) / T(P).
std::vector<double> reference_score_step(const Corpus& corpus, std::span<const double> scores);

// α·wPR + β·Author + γ·Journal + δ·Reference + (1 − α − β − γ − δ)·jump_i.
// An empty `jump` means the uniform 1/N distribution.
std::vector<double> combine_scores(const ComponentScores& components, const RankParams& params,
                                   std::span<const double> jump = {});

// Iterates the four steps (all reading the previous score vector) until the
// largest per-paper change drops below epsilon or max_iters is reached.
RankResult run_to_convergence(const Corpus& corpus, const RankGraph& graph, const CreditTable& credit,
                              const RankParams& params, std::span<const double> jump = {},
                              unsigned threads = 1);

// Score descending, then year ascending, then id ascending.
std::vector<PaperId> ranked_order(const Corpus& corpus, std::span<const double> scores);

// Same iteration with every edge at weight 1 and uniform credit shares.
RankResult cajtrank_baseline(const Corpus& corpus, const CreditTable& uniform_credit,
                             const RankParams& params, unsigned threads = 1);

// CAJTRank without the journal component and with the random jump drawn
// from exp(-rho · age) instead of 1/N.
RankResult futurerank_baseline(const Corpus& corpus, const CreditTable& uniform_credit,
                               const RankParams& params, const DecayParams& decay, unsigned threads = 1);
std::vector<double> age_decay_distribution(const Corpus& corpus, const DecayParams& decay);

// rank,paper_id,score,wpr,author,journal,reference
void write_ranking_csv(std::ostream& out, const Corpus& corpus, const RankResult& result);

}  // namespace coirank

#endif  // COIRANK_RANK_ENGINE_HPP_
