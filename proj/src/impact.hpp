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

#ifndef COIRANK_IMPACT_HPP_
#define COIRANK_IMPACT_HPP_

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "coi_classifier.hpp"
#include "corpus.hpp"
#include "credit.hpp"
#include "graph_index.hpp"

namespace coirank {

// I_A = Σ_i R · S(P_i), indexed by AuthorId.
std::vector<double> scholar_impact(const Corpus& corpus, const CreditTable& credit,
                                   std::span<const double> scores);

struct InstitutionImpact {
  std::vector<double> by_institution;  // I_I, indexed by InstitutionId
  // Credit of author mentions that carry no affiliation at all.
  double unaffiliated = 0.0;
};

// Each (paper, author) contribution R · S(P_i) goes to that author's first
// affiliation on that paper.
InstitutionImpact institution_impact(const Corpus& corpus, const CreditTable& credit,
                                     std::span<const double> scores);

struct CountryImpact {
  std::vector<double> by_country;  // I_C, indexed by CountryId
  double unknown_country = 0.0;    // institutions without a country
};

CountryImpact country_impact(const Corpus& corpus, const InstitutionImpact& institutions);

enum class CoicAttribution { kCited, kCiting, kBoth };
std::string_view to_string(CoicAttribution a);
std::optional<CoicAttribution> coic_attribution_from_string(std::string_view s);

struct CoiStatsOptions {
  CoicAttribution attribution = CoicAttribution::kCited;
  // Classes counted as COI citations; defaults to all four COI classes.
  std::array<bool, kCoiClassCount> classes{false, true, true, true, true};
};

struct GroupStats {
  std::size_t authors = 0;  // A_m / A_n
  std::size_t papers = 0;   // P_m / P_n
  std::size_t coic = 0;     // COIC_m / COIC_n
  double impact = 0.0;      // I_I / I_C
};

struct ImpactReport {
  std::vector<double> scholar;
  std::vector<GroupStats> institutions;  // indexed by InstitutionId
  std::vector<GroupStats> countries;     // indexed by CountryId
  // Author mentions without any affiliation, and COI citations whose
  // attributed paper has no affiliated author.
  GroupStats unaffiliated;
  // Institutions without a country plus the unaffiliated bucket.
  GroupStats unknown_country;
  double total_paper_score = 0.0;
  // country -> year -> value. Country key kUnknown is CountryId{} (invalid).
  std::map<CountryId, std::map<int, std::size_t>> yearly_coic;
  std::map<CountryId, std::map<int, double>> yearly_impact;
};

// Builds every scholar / institution / country total plus the COI-citation
// statistics. COIC counts one per (edge, institution) on the attributed side
// and buckets by the citing paper's year; country COIC is the sum over its
// institutions. Impact and COIC that reach no institution land in the
// unaffiliated bucket, so every total is conserved.
ImpactReport aggregate_impact(const Corpus& corpus, const Indices& indices, const CreditTable& credit,
                              std::span<const double> scores, std::span<const WeightedEdge> edges,
                              const CoiStatsOptions& options);

void write_institutions_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report);
void write_countries_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report);
void write_yearly_coic_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report);
void write_yearly_impact_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report);

}  // namespace coirank

#endif  // COIRANK_IMPACT_HPP_
