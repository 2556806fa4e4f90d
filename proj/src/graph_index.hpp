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

#ifndef COIRANK_GRAPH_INDEX_HPP_
#define COIRANK_GRAPH_INDEX_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <vector>

#include "common.hpp"
#include "corpus.hpp"

namespace coirank {

// Count and inclusive year range of a set of dated events (coauthored papers,
// or citing papers).
struct CollabRecord {
  std::uint32_t count = 0;
  int first_year = 0;
  int last_year = 0;

  int span_years() const { return last_year - first_year + 1; }
  friend bool operator==(const CollabRecord&, const CollabRecord&) = default;
};

// Which event years count when asking about a relationship "as of" a
// citation: everything up to and including `last_year`, optionally only the
// trailing `window` years.
struct YearScope {
  int last_year = std::numeric_limits<int>::max();
  int window = 0;  // 0 = no window

  static YearScope unbounded() { return {}; }
  static YearScope as_of(int year, int window_years = 0) { return {year, window_years}; }
  int first_year() const {
    return window > 0 ? last_year - window + 1 : std::numeric_limits<int>::min();
  }
};

// Sorted event years for a keyed relationship; answers scoped queries.
class DatedPairMap {
 public:
  void add(std::uint64_t key, int year) { years_[key].push_back(year); }
  void finalize();

  std::optional<CollabRecord> lookup(std::uint64_t key, YearScope scope) const;
  std::size_t size() const { return years_.size(); }
  // Entries in ascending key order.
  std::vector<std::pair<std::uint64_t, CollabRecord>> sorted_records() const;

 private:
  std::unordered_map<std::uint64_t, std::vector<int>> years_;
};

// N^{co-author}_{x,y} = |S_x ∩ S_y| with its first/last shared year. The
// diagonal (x, x) is answered from x's own papers, so a shared author on both
// ends of a citation reads as a coauthorship overlap.
class CoauthorIndex {
 public:
  std::optional<CollabRecord> lookup(AuthorId x, AuthorId y,
                                     YearScope scope = YearScope::unbounded()) const;
  // Off-diagonal pairs (x < y), full corpus scope, ascending.
  std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> pairs() const;

 private:
  friend class IndexBuilder;
  DatedPairMap shared_;   // key = pack(min, max), x != y
  DatedPairMap own_;      // key = pack(x, x)
};

// N^{cite}_{x,y}: papers of x that cite at least one paper of y, ordered pair.
class AuthorCiteIndex {
 public:
  std::optional<CollabRecord> lookup(AuthorId x, AuthorId y,
                                     YearScope scope = YearScope::unbounded()) const {
    return cites_.lookup(pack_pair(x.value, y.value), scope);
  }
  std::vector<std::pair<std::pair<AuthorId, AuthorId>, CollabRecord>> pairs() const;

 private:
  friend class IndexBuilder;
  DatedPairMap cites_;
};

// Papers whose reference list contains both i and j.
class CoCitationIndex {
 public:
  std::span<const PaperId> lookup(PaperId i, PaperId j) const;
  std::size_t size() const { return cociters_.size(); }
  // (partner, number of co-citing papers) for every paper co-cited with p,
  // ascending by partner.
  std::span<const std::pair<PaperId, std::uint32_t>> partners(PaperId p) const {
    return partners_[p.index()];
  }
  std::vector<std::pair<std::pair<PaperId, PaperId>, std::vector<PaperId>>> pairs() const;

 private:
  friend class IndexBuilder;
  std::unordered_map<std::uint64_t, std::vector<PaperId>> cociters_;
  std::vector<std::vector<std::pair<PaperId, std::uint32_t>>> partners_;
};

enum class IndependenceMode {
  kCoi,           // co-citer shares no author with either paper
  kSuspectedCoi,  // co-citer shares no affiliation with either paper
};

struct Indices {
  CoauthorIndex coauthors;
  AuthorCiteIndex author_cites;
  CoCitationIndex cocitations;
  // Per paper: sorted author ids and sorted union of every affiliation on any
  // mention.
  std::vector<std::vector<AuthorId>> paper_authors;
  std::vector<std::vector<InstitutionId>> paper_affiliations;
  // Per institution: sorted authors / papers mentioning it as any affiliation.
  std::vector<std::vector<AuthorId>> institution_authors;
  std::vector<std::vector<PaperId>> institution_papers;

  std::size_t independent_cociters(PaperId i, PaperId j, IndependenceMode mode) const;
  bool share_affiliation(PaperId i, PaperId j) const;
};

Indices build_indices(const Corpus& corpus);

// index,key_a,key_b,count,first_year,last_year
void write_indices_csv(std::ostream& out, const Corpus& corpus, const Indices& indices);

}  // namespace coirank

#endif  // COIRANK_GRAPH_INDEX_HPP_
