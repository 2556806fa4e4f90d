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

#include "impact.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace coirank {
namespace {

std::vector<InstitutionId> primary_institutions(const Paper& paper) {
  std::vector<InstitutionId> out;
  for (const auto& m : paper.authors) {
    if (const auto p = m.primary()) out.push_back(*p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view country_label(const Corpus& corpus, CountryId c) { return corpus.country_key(c); }

}  // namespace

std::vector<double> scholar_impact(const Corpus& corpus, const CreditTable& credit,
                                   std::span<const double> scores) {
  std::vector<double> out(corpus.author_count(), 0.0);
  for (std::size_t i = 0; i < corpus.paper_count(); ++i) {
    for (const auto& s : credit.shares(PaperId{i})) out[s.author.index()] += s.share * scores[i];
  }
  return out;
}

InstitutionImpact institution_impact(const Corpus& corpus, const CreditTable& credit,
                                     std::span<const double> scores) {
  InstitutionImpact out;
  out.by_institution.assign(corpus.institution_count(), 0.0);
  for (std::size_t i = 0; i < corpus.paper_count(); ++i) {
    const PaperId p{i};
    for (const auto& m : corpus.paper(p).authors) {
      const double contribution = credit.share(p, m.author) * scores[i];
      if (const auto primary = m.primary()) {
        out.by_institution[primary->index()] += contribution;
      } else {
        out.unaffiliated += contribution;
      }
    }
  }
  return out;
}

CountryImpact country_impact(const Corpus& corpus, const InstitutionImpact& institutions) {
  CountryImpact out;
  out.by_country.assign(corpus.country_count(), 0.0);
  for (std::size_t m = 0; m < institutions.by_institution.size(); ++m) {
    const CountryId c = corpus.institution(InstitutionId{m}).country;
    if (c.valid()) {
      out.by_country[c.index()] += institutions.by_institution[m];
    } else {
      out.unknown_country += institutions.by_institution[m];
    }
  }
  return out;
}

std::string_view to_string(CoicAttribution a) {
  switch (a) {
    case CoicAttribution::kCited: return "cited";
    case CoicAttribution::kCiting: return "citing";
    case CoicAttribution::kBoth: return "both";
  }
  return "cited";
}

std::optional<CoicAttribution> coic_attribution_from_string(std::string_view s) {
  if (s == "cited") return CoicAttribution::kCited;
  if (s == "citing") return CoicAttribution::kCiting;
  if (s == "both") return CoicAttribution::kBoth;
  return std::nullopt;
}

ImpactReport aggregate_impact(const Corpus& corpus, const Indices& indices, const CreditTable& credit,
                              std::span<const double> scores, std::span<const WeightedEdge> edges,
                              const CoiStatsOptions& options) {
  ImpactReport report;
  report.scholar = scholar_impact(corpus, credit, scores);
  for (double s : scores) report.total_paper_score += s;

  const InstitutionImpact inst_impact = institution_impact(corpus, credit, scores);
  const CountryImpact ctry_impact = country_impact(corpus, inst_impact);

  const std::size_t n_inst = corpus.institution_count();
  const std::size_t n_ctry = corpus.country_count();
  report.institutions.assign(n_inst, {});
  report.countries.assign(n_ctry, {});
  auto country_slot = [&](CountryId c) -> GroupStats& {
    return c.valid() ? report.countries[c.index()] : report.unknown_country;
  };

  // Sizes: any affiliation counts as membership. Bucket n_ctry is the
  // unknown country.
  std::vector<std::set<std::uint32_t>> country_authors(n_ctry + 1);
  std::vector<std::set<std::uint32_t>> country_papers(n_ctry + 1);
  auto country_bucket = [&](CountryId c) { return c.valid() ? c.index() : n_ctry; };
  for (std::size_t m = 0; m < n_inst; ++m) {
    GroupStats& g = report.institutions[m];
    g.authors = indices.institution_authors[m].size();
    g.papers = indices.institution_papers[m].size();
    g.impact = inst_impact.by_institution[m];
    const std::size_t b = country_bucket(corpus.institution(InstitutionId{m}).country);
    for (const AuthorId a : indices.institution_authors[m]) country_authors[b].insert(a.value);
    for (const PaperId p : indices.institution_papers[m]) country_papers[b].insert(p.value);
  }
  std::set<std::uint32_t> loose_authors;
  std::set<std::uint32_t> loose_papers;
  for (std::size_t i = 0; i < corpus.paper_count(); ++i) {
    for (const auto& m : corpus.paper(PaperId{i}).authors) {
      if (!m.affiliations.empty()) continue;
      loose_authors.insert(m.author.value);
      loose_papers.insert(static_cast<std::uint32_t>(i));
    }
  }
  report.unaffiliated.authors = loose_authors.size();
  report.unaffiliated.papers = loose_papers.size();
  report.unaffiliated.impact = inst_impact.unaffiliated;
  country_authors[n_ctry].insert(loose_authors.begin(), loose_authors.end());
  country_papers[n_ctry].insert(loose_papers.begin(), loose_papers.end());

  for (std::size_t c = 0; c < n_ctry; ++c) {
    report.countries[c].authors = country_authors[c].size();
    report.countries[c].papers = country_papers[c].size();
    report.countries[c].impact = ctry_impact.by_country[c];
  }
  report.unknown_country.authors = country_authors[n_ctry].size();
  report.unknown_country.papers = country_papers[n_ctry].size();
  report.unknown_country.impact = ctry_impact.unknown_country + inst_impact.unaffiliated;

  // COI citations.
  for (const WeightedEdge& e : edges) {
    if (!options.classes[static_cast<std::size_t>(e.coi_class)]) continue;
    std::vector<InstitutionId> targets;
    bool unattributed = false;
    auto collect = [&](PaperId p) {
      const auto primaries = primary_institutions(corpus.paper(p));
      if (primaries.empty()) unattributed = true;
      targets.insert(targets.end(), primaries.begin(), primaries.end());
    };
    if (options.attribution != CoicAttribution::kCiting) collect(e.cited);
    if (options.attribution != CoicAttribution::kCited) collect(e.citing);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const int year = corpus.paper(e.citing).year;
    for (const InstitutionId m : targets) {
      ++report.institutions[m.index()].coic;
      const CountryId c = corpus.institution(m).country;
      ++country_slot(c).coic;
      ++report.yearly_coic[c][year];
    }
    if (unattributed) {
      ++report.unaffiliated.coic;
      ++report.unknown_country.coic;
      ++report.yearly_coic[CountryId{}][year];
    }
  }

  // Impact per country per publication year.
  for (std::size_t i = 0; i < corpus.paper_count(); ++i) {
    const PaperId p{i};
    const Paper& paper = corpus.paper(p);
    for (const auto& m : paper.authors) {
      const auto primary = m.primary();
      const CountryId c = primary ? corpus.institution(*primary).country : CountryId{};
      report.yearly_impact[c][paper.year] += credit.share(p, m.author) * scores[i];
    }
  }
  return report;
}

void write_institutions_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report) {
  out << "key,country,A_m,P_m,COIC,I_I\n";
  for (std::size_t m = 0; m < report.institutions.size(); ++m) {
    const Institution& inst = corpus.institution(InstitutionId{m});
    const GroupStats& g = report.institutions[m];
    out << csv_escape(inst.key) << ',' << csv_escape(country_label(corpus, inst.country)) << ',' << g.authors
        << ',' << g.papers << ',' << g.coic << ',' << fmt::format("{:.17g}", g.impact) << '\n';
  }
  const GroupStats& u = report.unaffiliated;
  if (u.authors > 0 || u.coic > 0) {
    out << kUnknownKey << ',' << kUnknownKey << ',' << u.authors << ',' << u.papers << ',' << u.coic << ','
        << fmt::format("{:.17g}", u.impact) << '\n';
  }
}

void write_countries_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report) {
  out << "key,A_n,P_n,COIC,I_C\n";
  auto row = [&](std::string_view key, const GroupStats& g) {
    out << csv_escape(key) << ',' << g.authors << ',' << g.papers << ',' << g.coic << ','
        << fmt::format("{:.17g}", g.impact) << '\n';
  };
  for (std::size_t c = 0; c < report.countries.size(); ++c) {
    row(corpus.country_key(CountryId{c}), report.countries[c]);
  }
  if (report.unknown_country.authors > 0 || report.unknown_country.coic > 0 || report.unknown_country.papers > 0) {
    row(kUnknownKey, report.unknown_country);
  }
}

void write_yearly_coic_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report) {
  out << "country,year,coic\n";
  for (const auto& [c, series] : report.yearly_coic) {
    for (const auto& [year, count] : series) {
      out << csv_escape(country_label(corpus, c)) << ',' << year << ',' << count << '\n';
    }
  }
}

void write_yearly_impact_csv(std::ostream& out, const Corpus& corpus, const ImpactReport& report) {
  out << "country,year,impact\n";
  for (const auto& [c, series] : report.yearly_impact) {
    for (const auto& [year, value] : series) {
      out << csv_escape(country_label(corpus, c)) << ',' << year << ',' << fmt::format("{:.17g}", value) << '\n';
    }
  }
}

}  // namespace coirank
