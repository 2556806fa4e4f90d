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

#ifndef COIRANK_CORPUS_HPP_
#define COIRANK_CORPUS_HPP_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "common.hpp"
#include "normalize.hpp"

namespace coirank {

inline constexpr int kMinYear = 1800;
inline constexpr std::string_view kUnknownKey = "UNKNOWN";

struct AuthorMention {
  AuthorId author;
  // May be empty; the first entry is the primary institution.
  std::vector<InstitutionId> affiliations;
  std::uint32_t position = 0;

  std::optional<InstitutionId> primary() const {
    if (affiliations.empty()) return std::nullopt;
    return affiliations.front();
  }
};

struct Paper {
  std::string id;
  int year = 0;
  JournalId journal;
  std::string title;
  std::vector<AuthorMention> authors;
  // Reference ids after de-duplication and self-reference removal, in input
  // order. Unresolved ids stay here and are also listed as dangling.
  std::vector<std::string> references;
};

struct Institution {
  std::string key;
  CountryId country;  // invalid id == unknown country
};

struct Citation {
  PaperId citing;
  PaperId cited;
};

struct DanglingReference {
  PaperId citing;
  std::string target;
};

struct RecordError {
  std::size_t line = 0;
  std::string message;
};

// Immutable, id-indexed view of an ingested corpus. Ids are dense and assigned
// in order of first appearance in the input, so identical input yields
// identical ids.
class Corpus {
 public:
  struct IngestOptions {
    AliasTable aliases;
    int max_year = 0;  // 0 = current calendar year
  };

  // Reads JSON-Lines records. Malformed or invalid records are skipped and
  // reported in errors(); a duplicate paper id throws kDuplicateId.
  static Corpus ingest(std::istream& in, const IngestOptions& options);
  static Corpus ingest(std::istream& in) { return ingest(in, IngestOptions{}); }

  std::size_t paper_count() const { return papers_.size(); }
  std::size_t author_count() const { return author_keys_.size(); }
  std::size_t institution_count() const { return institutions_.size(); }
  std::size_t country_count() const { return country_keys_.size(); }
  std::size_t journal_count() const { return journal_keys_.size(); }

  const std::vector<Paper>& papers() const { return papers_; }
  const Paper& paper(PaperId id) const { return papers_[id.index()]; }
  std::optional<PaperId> find(std::string_view id) const;
  std::optional<AuthorId> find_author(std::string_view key) const;

  const std::string& author_key(AuthorId id) const { return author_keys_[id.index()]; }
  const Institution& institution(InstitutionId id) const { return institutions_[id.index()]; }
  std::string_view country_key(CountryId id) const {
    return id.valid() ? std::string_view(country_keys_[id.index()]) : kUnknownKey;
  }
  std::string_view journal_key(JournalId id) const { return journal_keys_[id.index()]; }

  // Citation graph restricted to resolvable references.
  const std::vector<Citation>& edges() const { return edges_; }
  std::span<const PaperId> references_of(PaperId p) const { return out_[p.index()]; }
  std::span<const PaperId> citers_of(PaperId p) const { return in_[p.index()]; }
  std::span<const PaperId> papers_of_author(AuthorId a) const { return author_papers_[a.index()]; }
  std::span<const PaperId> papers_of_journal(JournalId j) const { return journal_papers_[j.index()]; }

  const std::vector<DanglingReference>& dangling() const { return dangling_; }
  const std::vector<RecordError>& errors() const { return errors_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Citations whose citing paper is more than one year older than the cited one.
  const std::vector<Citation>& temporal_anomalies() const { return anomalies_; }

  int max_year() const { return max_year_; }
  int min_year() const { return min_year_; }

 private:
  void finalize();

  std::vector<Paper> papers_;
  std::unordered_map<std::string, PaperId> paper_index_;
  std::vector<std::string> author_keys_;
  std::unordered_map<std::string, AuthorId> author_index_;
  std::vector<Institution> institutions_;
  std::unordered_map<std::string, InstitutionId> institution_index_;
  std::vector<std::string> country_keys_;
  std::unordered_map<std::string, CountryId> country_index_;
  std::vector<std::string> journal_keys_;
  std::unordered_map<std::string, JournalId> journal_index_;

  std::vector<Citation> edges_;
  std::vector<std::vector<PaperId>> out_;
  std::vector<std::vector<PaperId>> in_;
  std::vector<std::vector<PaperId>> author_papers_;
  std::vector<std::vector<PaperId>> journal_papers_;
  std::vector<DanglingReference> dangling_;
  std::vector<RecordError> errors_;
  std::vector<std::string> warnings_;
  std::vector<Citation> anomalies_;
  int max_year_ = 0;
  int min_year_ = 0;

  friend class CorpusBuilder;
};

}  // namespace coirank

#endif  // COIRANK_CORPUS_HPP_
