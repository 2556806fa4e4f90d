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

#include "credit.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace coirank {
namespace {

std::vector<CreditShare> uniform_shares(const Paper& paper) {
  std::vector<CreditShare> out;
  const double share = 1.0 / static_cast<double>(paper.authors.size());
  for (const auto& m : paper.authors) out.push_back({m.author, share});
  return out;
}

// Collective credit: every author collects credit from each paper in the
// co-cited set D (the paper itself plus everything co-cited with it), in
// proportion to how strongly that paper is co-cited and to the author's
// 1/|authors| stake in it.
std::vector<CreditShare> collective_shares(const Corpus& corpus, const Indices& indices, PaperId paper) {
  const Paper& p = corpus.paper(paper);
  const std::size_t n = p.authors.size();
  if (n == 1) return {{p.authors.front().author, 1.0}};

  std::vector<double> raw(n, 0.0);
  bool outside_credit = false;

  // d0 = the paper itself, strength = its citation count.
  const double own_strength = static_cast<double>(corpus.citers_of(paper).size());
  for (std::size_t a = 0; a < n; ++a) raw[a] += own_strength / static_cast<double>(n);

  for (const auto& [partner, strength] : indices.cocitations.partners(paper)) {
    const auto& partner_authors = indices.paper_authors[partner.index()];
    const double stake = 1.0 / static_cast<double>(partner_authors.size());
    for (std::size_t a = 0; a < n; ++a) {
      if (std::binary_search(partner_authors.begin(), partner_authors.end(), p.authors[a].author)) {
        raw[a] += stake * static_cast<double>(strength);
        outside_credit = true;
      }
    }
  }

  double total = 0.0;
  for (double c : raw) total += c;
  // Uncited papers have no co-cited set; when no author appears anywhere in
  // D besides the paper itself the allocation is exactly uniform.
  if (total <= 0.0 || !outside_credit) return uniform_shares(p);

  std::vector<CreditShare> out;
  out.reserve(n);
  for (std::size_t a = 0; a < n; ++a) out.push_back({p.authors[a].author, raw[a] / total});
  return out;
}

}  // namespace

std::string_view to_string(CreditScheme scheme) {
  switch (scheme) {
    case CreditScheme::kCollective: return "collective";
    case CreditScheme::kUniform: return "uniform";
    case CreditScheme::kFirstAuthor: return "first-author";
  }
  return "collective";
}

std::optional<CreditScheme> credit_scheme_from_string(std::string_view s) {
  if (s == "collective") return CreditScheme::kCollective;
  if (s == "uniform") return CreditScheme::kUniform;
  if (s == "first-author") return CreditScheme::kFirstAuthor;
  return std::nullopt;
}

std::vector<CreditShare> credit_shares(const Corpus& corpus, const Indices& indices, PaperId paper,
                                       CreditScheme scheme) {
  const Paper& p = corpus.paper(paper);
  switch (scheme) {
    case CreditScheme::kUniform:
      return uniform_shares(p);
    case CreditScheme::kFirstAuthor: {
      std::vector<CreditShare> out;
      for (const auto& m : p.authors) out.push_back({m.author, m.position == 0 ? 1.0 : 0.0});
      return out;
    }
    case CreditScheme::kCollective:
      break;
  }
  return collective_shares(corpus, indices, paper);
}

double CreditTable::share(PaperId p, AuthorId a) const {
  for (const auto& s : per_paper_[p.index()]) {
    if (s.author == a) return s.share;
  }
  return 0.0;
}

CreditTable build_credit_table(const Corpus& corpus, const Indices& indices, CreditScheme scheme,
                               unsigned threads) {
  std::vector<std::vector<CreditShare>> per_paper(corpus.paper_count());
  parallel_for(per_paper.size(), threads,
               [&](std::size_t i) { per_paper[i] = credit_shares(corpus, indices, PaperId{i}, scheme); });
  return CreditTable(std::move(per_paper));
}

void write_credit_csv(std::ostream& out, const Corpus& corpus, const CreditTable& table) {
  out << "paper_id,author_key,share\n";
  for (std::size_t i = 0; i < table.paper_count(); ++i) {
    const PaperId p{i};
    for (const auto& s : table.shares(p)) {
      out << csv_escape(corpus.paper(p).id) << ',' << csv_escape(corpus.author_key(s.author)) << ','
          << fmt::format("{:.17g}", s.share) << '\n';
    }
  }
}

}  // namespace coirank
