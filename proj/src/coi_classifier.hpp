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

#ifndef COIRANK_COI_CLASSIFIER_HPP_
#define COIRANK_COI_CLASSIFIER_HPP_

#include <array>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "graph_index.hpp"

namespace coirank {

enum class CoiClass : std::uint8_t {
  kNormal = 0,
  kPositiveCoi = 1,
  kNegativeCoi = 2,
  kPositiveSuspectedCoi = 3,
  kNegativeSuspectedCoi = 4,
};
inline constexpr std::size_t kCoiClassCount = 5;

std::string_view to_string(CoiClass c);
std::optional<CoiClass> coi_class_from_string(std::string_view s);
inline bool is_coi(CoiClass c) { return c != CoiClass::kNormal; }
inline bool is_negative(CoiClass c) {
  return c == CoiClass::kNegativeCoi || c == CoiClass::kNegativeSuspectedCoi;
}

// Smallest edge weight ever emitted; keeps heavily penalized citations from
// underflowing to zero and vanishing from the graph.
inline constexpr double kMinEdgeWeight = 1e-12;

struct DecayParams {
  double rho = 0.62;
  int current_year = 0;  // T^{Current}

  void validate(int corpus_max_year) const;
};

struct WeightedEdge {
  PaperId citing;
  PaperId cited;
  CoiClass coi_class = CoiClass::kNormal;
  double coi_strength = 0.0;  // 0 unless the class is negative
  double weight = 1.0;        // in (0, 1]
};

struct EdgeWeight {
  double weight = 1.0;
  bool floored = false;
};

struct ClassifierOptions {
  DecayParams decay;
  int coi_window = 0;  // years; 0 = no trailing window
};

struct ClassSummary {
  std::array<std::size_t, kCoiClassCount> edges{};
  // Distinct unordered author pairs (x != y) that carry the relationship
  // behind each class.
  std::array<std::size_t, kCoiClassCount> author_pairs{};
  // Distinct papers on either end of an edge of each class.
  std::array<std::size_t, kCoiClassCount> papers{};
  std::size_t floor_hits = 0;
};

struct Classification {
  std::vector<WeightedEdge> edges;  // sorted by (citing id, cited id)
  ClassSummary summary;
};

CoiClass classify_edge(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                       int coi_window = 0);

// W^{A-NCOI}_{x,y} = N^{co-author}_{x,y} / ΔT_c. Throws kNotFound when the
// pair never coauthored inside the scope.
double author_ncoi_strength(AuthorId x, AuthorId y, const CoauthorIndex& coauthors,
                            YearScope scope = YearScope::unbounded());
// W^{A-NSCOI}_{x,y} = N^{cite}_{x,y} / ΔT_s for the ordered pair.
double author_nscoi_strength(AuthorId x, AuthorId y, const AuthorCiteIndex& cites,
                             YearScope scope = YearScope::unbounded());

// Sums of the author-pair strengths over every (citing author, cited author)
// pair that has a record; missing pairs contribute 0. Pairs are visited in
// author-list order.
double paper_ncoi_strength(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                           YearScope scope);
double paper_nscoi_strength(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                            YearScope scope);

// exp(-rho * (T^{Current} - T^{Cite} + 1) * strength), floored at
// kMinEdgeWeight. Throws kInvalidArgument for a negative strength or a
// citation year after T^{Current}.
EdgeWeight ncoi_edge_weight(double strength, int cite_year, const DecayParams& params);
inline EdgeWeight nscoi_edge_weight(double strength, int cite_year, const DecayParams& params) {
  return ncoi_edge_weight(strength, cite_year, params);
}

Classification classify_corpus(const Corpus& corpus, const Indices& indices,
                               const ClassifierOptions& options, unsigned threads = 1);

// citing,cited,class,coi_strength,weight
void write_edges_csv(std::ostream& out, const Corpus& corpus, const Classification& classification);

}  // namespace coirank

#endif  // COIRANK_COI_CLASSIFIER_HPP_
