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

#include "coi_classifier.hpp"

#include <cmath>
#include <unordered_set>

#include <fmt/format.h>

namespace coirank {
namespace {

constexpr std::array<std::string_view, kCoiClassCount> kClassNames = {
    "NORMAL", "POSITIVE_COI", "NEGATIVE_COI", "POSITIVE_SUSPECTED_COI", "NEGATIVE_SUSPECTED_COI",
};

bool have_coauthored(const Indices& indices, PaperId citing, PaperId cited, YearScope scope) {
  for (const AuthorId x : indices.paper_authors[citing.index()]) {
    for (const AuthorId y : indices.paper_authors[cited.index()]) {
      if (indices.coauthors.lookup(x, y, scope)) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(CoiClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<CoiClass> coi_class_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == s) return static_cast<CoiClass>(i);
  }
  return std::nullopt;
}

void DecayParams::validate(int corpus_max_year) const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("rho must be > 0 (got {})", rho));
  }
  if (current_year < corpus_max_year) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("evaluation year {} precedes the newest paper ({})", current_year, corpus_max_year));
  }
}

CoiClass classify_edge(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                       int coi_window) {
  const YearScope scope = YearScope::as_of(corpus.paper(citing).year, coi_window);
  if (have_coauthored(indices, citing, cited, scope)) {
    return indices.independent_cociters(citing, cited, IndependenceMode::kCoi) > 0 ? CoiClass::kPositiveCoi
                                                                                   : CoiClass::kNegativeCoi;
  }
  if (indices.share_affiliation(citing, cited)) {
    return indices.independent_cociters(citing, cited, IndependenceMode::kSuspectedCoi) > 0
               ? CoiClass::kPositiveSuspectedCoi
               : CoiClass::kNegativeSuspectedCoi;
  }
  return CoiClass::kNormal;
}

double author_ncoi_strength(AuthorId x, AuthorId y, const CoauthorIndex& coauthors, YearScope scope) {
  const auto record = coauthors.lookup(x, y, scope);
  if (!record) throw Error(ErrorCode::kNotFound, "author pair has no coauthorship record");
  return static_cast<double>(record->count) / record->span_years();
}

double author_nscoi_strength(AuthorId x, AuthorId y, const AuthorCiteIndex& cites, YearScope scope) {
  const auto record = cites.lookup(x, y, scope);
  if (!record) throw Error(ErrorCode::kNotFound, "author pair has no citation record");
  return static_cast<double>(record->count) / record->span_years();
}

double paper_ncoi_strength(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                           YearScope scope) {
  double total = 0.0;
  for (const auto& mx : corpus.paper(citing).authors) {
    for (const auto& my : corpus.paper(cited).authors) {
      if (const auto r = indices.coauthors.lookup(mx.author, my.author, scope)) {
        total += static_cast<double>(r->count) / r->span_years();
      }
    }
  }
  return total;
}

double paper_nscoi_strength(const Corpus& corpus, const Indices& indices, PaperId citing, PaperId cited,
                           YearScope scope) {
  double total = 0.0;
  for (const auto& mx : corpus.paper(citing).authors) {
    for (const auto& my : corpus.paper(cited).authors) {
      if (const auto r = indices.author_cites.lookup(mx.author, my.author, scope)) {
        total += static_cast<double>(r->count) / r->span_years();
      }
    }
  }
  return total;
}

EdgeWeight ncoi_edge_weight(double strength, int cite_year, const DecayParams& params) {
  if (!(strength >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("COI strength must be >= 0 (got {})", strength));
  }
  if (cite_year > params.current_year) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("citation year {} is after the evaluation year {}", cite_year, params.current_year));
  }
  const double span = static_cast<double>(params.current_year - cite_year + 1);
  const double raw = std::exp(-params.rho * span * strength);
  if (raw < kMinEdgeWeight) return {kMinEdgeWeight, true};
  return {raw, false};
}

Classification classify_corpus(const Corpus& corpus, const Indices& indices,
                               const ClassifierOptions& options, unsigned threads) {
  const auto& edges = corpus.edges();
  Classification result;
  result.edges.resize(edges.size());
  std::vector<char> floored(edges.size(), 0);

  parallel_for(edges.size(), threads, [&](std::size_t e) {
    const auto [citing, cited] = edges[e];
    WeightedEdge& out = result.edges[e];
    out.citing = citing;
    out.cited = cited;
    out.coi_class = classify_edge(corpus, indices, citing, cited, options.coi_window);
    if (!is_negative(out.coi_class)) return;
    const int cite_year = corpus.paper(citing).year;
    const YearScope scope = YearScope::as_of(cite_year, options.coi_window);
    out.coi_strength = out.coi_class == CoiClass::kNegativeCoi
                           ? paper_ncoi_strength(corpus, indices, citing, cited, scope)
                           : paper_nscoi_strength(corpus, indices, citing, cited, scope);
    const EdgeWeight w = ncoi_edge_weight(out.coi_strength, cite_year, options.decay);
    out.weight = w.weight;
    floored[e] = w.floored;
  });

  std::sort(result.edges.begin(), result.edges.end(), [&](const WeightedEdge& a, const WeightedEdge& b) {
    const auto& ai = corpus.paper(a.citing).id;
    const auto& bi = corpus.paper(b.citing).id;
    if (ai != bi) return ai < bi;
    return corpus.paper(a.cited).id < corpus.paper(b.cited).id;
  });

  ClassSummary& summary = result.summary;
  for (char f : floored) summary.floor_hits += f ? 1 : 0;
  std::array<std::unordered_set<std::uint64_t>, kCoiClassCount> pair_sets;
  std::array<std::unordered_set<std::uint32_t>, kCoiClassCount> paper_sets;
  for (const WeightedEdge& e : result.edges) {
    const auto c = static_cast<std::size_t>(e.coi_class);
    ++summary.edges[c];
    paper_sets[c].insert(e.citing.value);
    paper_sets[c].insert(e.cited.value);
    if (e.coi_class == CoiClass::kNormal) continue;
    const bool coauthor_class = e.coi_class == CoiClass::kPositiveCoi || e.coi_class == CoiClass::kNegativeCoi;
    const YearScope scope = YearScope::as_of(corpus.paper(e.citing).year, options.coi_window);
    for (const auto& mx : corpus.paper(e.citing).authors) {
      for (const auto& my : corpus.paper(e.cited).authors) {
        if (mx.author == my.author) continue;
        bool related = false;
        if (coauthor_class) {
          related = indices.coauthors.lookup(mx.author, my.author, scope).has_value();
        } else {
          for (const InstitutionId inst : mx.affiliations) {
            if (std::find(my.affiliations.begin(), my.affiliations.end(), inst) != my.affiliations.end()) {
              related = true;
              break;
            }
          }
        }
        if (related) pair_sets[c].insert(pack_unordered(mx.author.value, my.author.value));
      }
    }
  }
  for (std::size_t c = 0; c < kCoiClassCount; ++c) {
    summary.author_pairs[c] = pair_sets[c].size();
    summary.papers[c] = paper_sets[c].size();
  }
  return result;
}

void write_edges_csv(std::ostream& out, const Corpus& corpus, const Classification& classification) {
  out << "citing,cited,class,coi_strength,weight\n";
  for (const WeightedEdge& e : classification.edges) {
    out << csv_escape(corpus.paper(e.citing).id) << ',' << csv_escape(corpus.paper(e.cited).id) << ','
        << to_string(e.coi_class) << ',' << fmt::format("{:.17g},{:.17g}", e.coi_strength, e.weight) << '\n';
  }
}

}  // namespace coirank
