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

#include "graph_index.hpp"

#include <algorithm>

namespace coirank {
namespace {

template <typename T>
bool sorted_intersect(std::span<const T> a, std::span<const T> b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

template <typename T>
std::vector<T> sorted_union(std::span<const T> a, std::span<const T> b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void DatedPairMap::finalize() {
  for (auto& [key, years] : years_) std::sort(years.begin(), years.end());
}

std::optional<CollabRecord> DatedPairMap::lookup(std::uint64_t key, YearScope scope) const {
  const auto it = years_.find(key);
  if (it == years_.end()) return std::nullopt;
  const auto& years = it->second;
  const auto lo = std::lower_bound(years.begin(), years.end(), scope.first_year());
  const auto hi = std::upper_bound(lo, years.end(), scope.last_year);
  if (lo == hi) return std::nullopt;
  return CollabRecord{static_cast<std::uint32_t>(hi - lo), *lo, *(hi - 1)};
}

std::vector<std::pair<std::uint64_t, CollabRecord>> DatedPairMap::sorted_records() const {
  std::vector<std::pair<std::uint64_t, CollabRecord>> out;
  out.reserve(years_.size());
  for (const auto& [key, years] : years_) {
    out.push_back({key, CollabRecord{static_cast<std::uint32_t>(years.size()), years.front(), years.back()}});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<CollabRecord> CoauthorIndex::lookup(AuthorId x, AuthorId y, YearScope scope) const {
  if (x == y) return own_.lookup(pack_pair(x.value, x.value), scope);
  return shared_.lookup(pack_unordered(x.value, y.value), scope);
}

std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> CoauthorIndex::pairs() const {
  std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> out;
  for (const auto& [key, record] : shared_.sorted_records()) {
    out.push_back({{AuthorId{static_cast<std::uint32_t>(key >> 32)},
                    AuthorId{static_cast<std::uint32_t>(key & 0xFFFFFFFFu)}},
                   record});
  }
  return out;
}

std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> AuthorCiteIndex::pairs() const {
  std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> out;
  for (const auto& [key, record] : cites_.sorted_records()) {
    out.push_back({{AuthorId{static_cast<std::uint32_t>(key >> 32)},
                    AuthorId{static_cast<std::uint32_t>(key & 0xFFFFFFFFu)}},
                   record});
  }
  return out;
}

std::span<const PaperId> CoCitationIndex::lookup(PaperId i, PaperId j) const {
  if (i == j) return {};
  const auto it = cociters_.find(pack_unordered(i.value, j.value));
  if (it == cociters_.end()) return {};
  return it->second;
}

std::vector<std::pair<std::pair<PaperId, PaperId>, std::vector<PaperId>>> CoCitationIndex::pairs() const {
  std::vector<std::pair<std::pair<PaperId, PaperId>, std::vector<PaperId>>> out;
  out.reserve(cociters_.size());
  for (const auto& [key, list] : cociters_) {
    out.push_back({{PaperId{static_cast<std::uint32_t>(key >> 32)},
                    PaperId{static_cast<std::uint32_t>(key & 0xFFFFFFFFu)}},
                   list});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

class IndexBuilder {
 public:
  static Indices build(const Corpus& corpus) {
    Indices idx;
    const std::size_t n = corpus.paper_count();
    idx.paper_authors.resize(n);
    idx.paper_affiliations.resize(n);
    idx.institution_authors.resize(corpus.institution_count());
    idx.institution_papers.resize(corpus.institution_count());

    for (std::size_t i = 0; i < n; ++i) {
      const Paper& p = corpus.papers()[i];
      for (const auto& m : p.authors) {
        idx.paper_authors[i].push_back(m.author);
        for (const InstitutionId inst : m.affiliations) {
          idx.paper_affiliations[i].push_back(inst);
          idx.institution_authors[inst.index()].push_back(m.author);
          idx.institution_papers[inst.index()].push_back(PaperId{i});
        }
      }
      sort_unique(idx.paper_authors[i]);
      sort_unique(idx.paper_affiliations[i]);
    }
    for (auto& v : idx.institution_authors) sort_unique(v);
    for (auto& v : idx.institution_papers) sort_unique(v);

    for (std::size_t i = 0; i < n; ++i) {
      const int year = corpus.papers()[i].year;
      const auto& authors = idx.paper_authors[i];
      for (std::size_t a = 0; a < authors.size(); ++a) {
        idx.coauthors.own_.add(pack_pair(authors[a].value, authors[a].value), year);
        for (std::size_t b = a + 1; b < authors.size(); ++b) {
          idx.coauthors.shared_.add(pack_unordered(authors[a].value, authors[b].value), year);
        }
      }

      // Authors reached by this paper's references; one event per citing paper.
      std::vector<AuthorId> cited_authors;
      for (const PaperId cited : corpus.references_of(PaperId{i})) {
        const auto& ca = idx.paper_authors[cited.index()];
        cited_authors.insert(cited_authors.end(), ca.begin(), ca.end());
      }
      sort_unique(cited_authors);
      for (const AuthorId x : authors) {
        for (const AuthorId y : cited_authors) idx.author_cites.cites_.add(pack_pair(x.value, y.value), year);
      }

      const auto refs = corpus.references_of(PaperId{i});
      for (std::size_t a = 0; a < refs.size(); ++a) {
        for (std::size_t b = a + 1; b < refs.size(); ++b) {
          idx.cocitations.cociters_[pack_unordered(refs[a].value, refs[b].value)].push_back(PaperId{i});
        }
      }
    }
    idx.coauthors.own_.finalize();
    idx.coauthors.shared_.finalize();
    idx.author_cites.cites_.finalize();

    idx.cocitations.partners_.assign(n, {});
    for (const auto& [key, list] : idx.cocitations.cociters_) {
      const auto a = static_cast<std::uint32_t>(key >> 32);
      const auto b = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
      const auto count = static_cast<std::uint32_t>(list.size());
      idx.cocitations.partners_[a].push_back({PaperId{b}, count});
      idx.cocitations.partners_[b].push_back({PaperId{a}, count});
    }
    for (auto& partners : idx.cocitations.partners_) std::sort(partners.begin(), partners.end());
    return idx;
  }
};

Indices build_indices(const Corpus& corpus) { return IndexBuilder::build(corpus); }

std::size_t Indices::independent_cociters(PaperId i, PaperId j, IndependenceMode mode) const {
  const auto cociters = cocitations.lookup(i, j);
  if (cociters.empty()) return 0;
  std::size_t count = 0;
  if (mode == IndependenceMode::kCoi) {
    const auto excluded = sorted_union<AuthorId>(paper_authors[i.index()], paper_authors[j.index()]);
    for (const PaperId c : cociters) {
      if (!sorted_intersect<AuthorId>(paper_authors[c.index()], excluded)) ++count;
    }
  } else {
    const auto excluded =
        sorted_union<InstitutionId>(paper_affiliations[i.index()], paper_affiliations[j.index()]);
    for (const PaperId c : cociters) {
      if (!sorted_intersect<InstitutionId>(paper_affiliations[c.index()], excluded)) ++count;
    }
  }
  return count;
}

bool Indices::share_affiliation(PaperId i, PaperId j) const {
  return sorted_intersect<InstitutionId>(paper_affiliations[i.index()], paper_affiliations[j.index()]);
}

void write_indices_csv(std::ostream& out, const Corpus& corpus, const Indices& indices) {
  out << "index,key_a,key_b,count,first_year,last_year\n";
  const auto quote = csv_escape;
  for (const auto& [pair, rec] : indices.coauthors.pairs()) {
    out << "coauthor," << quote(corpus.author_key(pair.first)) << ',' << quote(corpus.author_key(pair.second))
        << ',' << rec.count << ',' << rec.first_year << ',' << rec.last_year << '\n';
  }
  for (const auto& [pair, rec] : indices.author_cites.pairs()) {
    out << "author_cite," << quote(corpus.author_key(pair.first)) << ','
        << quote(corpus.author_key(pair.second)) << ',' << rec.count << ',' << rec.first_year << ','
        << rec.last_year << '\n';
  }
  for (const auto& [pair, list] : indices.cocitations.pairs()) {
    int first = std::numeric_limits<int>::max();
    int last = std::numeric_limits<int>::min();
    for (const PaperId c : list) {
      first = std::min(first, corpus.paper(c).year);
      last = std::max(last, corpus.paper(c).year);
    }
    out << "cocitation," << quote(corpus.paper(pair.first).id) << ',' << quote(corpus.paper(pair.second).id)
        << ',' << list.size() << ',' << first << ',' << last << '\n';
  }
}

}  // namespace coirank
