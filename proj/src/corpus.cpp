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

#include "corpus.hpp"

#include <chrono>
#include <unordered_set>

#include "json.hpp"

namespace coirank {
namespace {

using nlohmann::json;

int current_calendar_year() {
  const auto today = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
  return static_cast<int>(std::chrono::year_month_day{today}.year());
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct RecordReject {
  std::string message;
};

}  // namespace

class CorpusBuilder {
 public:
  CorpusBuilder(Corpus& corpus, const Corpus::IngestOptions& options)
      : corpus_(corpus),
        options_(options),
        max_year_(options.max_year != 0 ? options.max_year : current_calendar_year()) {}

  void add_line(std::string_view line, std::size_t line_number) {
    if (trim(line).empty()) return;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      reject(line_number, std::string("malformed JSON: ") + e.what());
      return;
    }
    try {
      admit(record, line_number);
    } catch (const RecordReject& r) {
      reject(line_number, r.message);
    }
  }

 private:
  void reject(std::size_t line_number, std::string message) {
    corpus_.errors_.push_back({line_number, std::move(message)});
  }

  void warn(std::size_t line_number, const std::string& message) {
    corpus_.warnings_.push_back("line " + std::to_string(line_number) + ": " + message);
  }

  static const json& require(const json& record, const char* field) {
    if (!record.is_object()) throw RecordReject{"record is not a JSON object"};
    const auto it = record.find(field);
    if (it == record.end() || it->is_null()) {
      throw RecordReject{std::string("missing required field '") + field + "'"};
    }
    return *it;
  }

  void admit(const json& record, std::size_t line_number) {
    const json& id_field = require(record, "id");
    if (!id_field.is_string()) throw RecordReject{"field 'id' must be a string"};
    const std::string id(trim(id_field.get_ref<const std::string&>()));
    if (id.empty()) throw RecordReject{"field 'id' is empty"};

    const json& year_field = require(record, "year");
    if (!year_field.is_number_integer()) throw RecordReject{"field 'year' must be an integer"};
    const auto year = year_field.get<long long>();
    if (year < kMinYear || year > max_year_) {
      throw RecordReject{"year " + std::to_string(year) + " outside [" + std::to_string(kMinYear) +
                         ", " + std::to_string(max_year_) + "]"};
    }

    const json& authors_field = require(record, "authors");
    if (!authors_field.is_array() || authors_field.empty()) {
      throw RecordReject{"field 'authors' must be a non-empty array"};
    }

    Paper paper;
    paper.id = id;
    paper.year = static_cast<int>(year);
    const std::string journal = optional_string(record, "journal");
    paper.title = optional_string(record, "title");

    // Normalize everything before interning so a rejected record leaves no
    // trace in the id tables.
    struct PendingMention {
      std::string author;
      std::vector<std::string> affiliations;
      std::optional<std::string> country;
    };
    std::vector<PendingMention> pending;
    std::unordered_set<std::string> seen_authors;
    for (const json& entry : authors_field) {
      if (!entry.is_object()) throw RecordReject{"author entries must be objects"};
      const auto name_it = entry.find("name");
      if (name_it == entry.end() || !name_it->is_string()) {
        throw RecordReject{"author entry without a string 'name'"};
      }
      PendingMention mention;
      try {
        mention.author = normalize_author(name_it->get_ref<const std::string&>());
      } catch (const Error& e) {
        throw RecordReject{e.what()};
      }
      if (!seen_authors.insert(mention.author).second) {
        warn(line_number, "paper '" + id + "' lists author '" + mention.author +
                              "' twice; keeping the first mention");
        continue;
      }
      if (const auto aff_it = entry.find("affiliations"); aff_it != entry.end() && !aff_it->is_null()) {
        if (!aff_it->is_array()) throw RecordReject{"'affiliations' must be an array of strings"};
        std::unordered_set<std::string> seen_affiliations;
        for (const json& aff : *aff_it) {
          if (!aff.is_string()) throw RecordReject{"'affiliations' must be an array of strings"};
          std::string key;
          try {
            key = options_.aliases.apply(normalize_affiliation(aff.get_ref<const std::string&>()));
          } catch (const Error&) {
            warn(line_number, "ignoring empty affiliation on paper '" + id + "'");
            continue;
          }
          if (seen_affiliations.insert(key).second) mention.affiliations.push_back(std::move(key));
        }
      }
      if (const auto c_it = entry.find("country"); c_it != entry.end() && !c_it->is_null()) {
        if (!c_it->is_string()) throw RecordReject{"'country' must be a string or null"};
        try {
          mention.country = normalize_country(c_it->get_ref<const std::string&>());
        } catch (const Error&) {
          // blank country == unknown
        }
      }
      pending.push_back(std::move(mention));
    }

    std::vector<std::string> references;
    if (const auto refs_it = record.find("references"); refs_it != record.end() && !refs_it->is_null()) {
      if (!refs_it->is_array()) throw RecordReject{"'references' must be an array of strings"};
      std::unordered_set<std::string> seen_refs;
      for (const json& ref : *refs_it) {
        if (!ref.is_string()) throw RecordReject{"'references' must be an array of strings"};
        std::string target(trim(ref.get_ref<const std::string&>()));
        if (target.empty()) continue;
        if (target == id) {
          warn(line_number, "paper '" + id + "' references itself; dropped");
          continue;
        }
        if (seen_refs.insert(target).second) references.push_back(std::move(target));
      }
    }

    if (const auto it = corpus_.paper_index_.find(id); it != corpus_.paper_index_.end()) {
      throw Error(ErrorCode::kDuplicateId,
                  "line " + std::to_string(line_number) + ": duplicate paper id '" + id +
                      "' (first admitted on line " + std::to_string(admitted_lines_[it->second.index()]) +
                      ")");
    }

    paper.journal = intern_journal(journal);
    for (std::size_t pos = 0; pos < pending.size(); ++pos) {
      auto& m = pending[pos];
      AuthorMention mention;
      mention.author = intern_author(m.author);
      mention.position = static_cast<std::uint32_t>(pos);
      const CountryId country = m.country ? intern_country(*m.country) : CountryId{};
      for (auto& key : m.affiliations) {
        const InstitutionId inst = intern_institution(key);
        Institution& record_inst = corpus_.institutions_[inst.index()];
        if (country.valid()) {
          if (!record_inst.country.valid()) {
            record_inst.country = country;
          } else if (record_inst.country != country) {
            warn(line_number, "institution '" + key + "' already assigned to country '" +
                                  std::string(corpus_.country_key(record_inst.country)) +
                                  "'; ignoring '" + std::string(corpus_.country_key(country)) + "'");
          }
        }
        mention.affiliations.push_back(inst);
      }
      paper.authors.push_back(std::move(mention));
    }
    paper.references = std::move(references);

    const PaperId pid{corpus_.papers_.size()};
    corpus_.paper_index_.emplace(paper.id, pid);
    corpus_.papers_.push_back(std::move(paper));
    admitted_lines_.push_back(line_number);
  }

  static std::string optional_string(const json& record, const char* field) {
    const auto it = record.find(field);
    if (it == record.end() || it->is_null()) return {};
    if (!it->is_string()) throw RecordReject{std::string("field '") + field + "' must be a string"};
    return std::string(trim(it->get_ref<const std::string&>()));
  }

  JournalId intern_journal(const std::string& raw) {
    const std::string key = raw.empty() ? std::string(kUnknownKey) : raw;
    auto [it, inserted] = corpus_.journal_index_.try_emplace(key, JournalId{corpus_.journal_keys_.size()});
    if (inserted) corpus_.journal_keys_.push_back(key);
    return it->second;
  }

  AuthorId intern_author(const std::string& key) {
    auto [it, inserted] = corpus_.author_index_.try_emplace(key, AuthorId{corpus_.author_keys_.size()});
    if (inserted) corpus_.author_keys_.push_back(key);
    return it->second;
  }

  InstitutionId intern_institution(const std::string& key) {
    auto [it, inserted] =
        corpus_.institution_index_.try_emplace(key, InstitutionId{corpus_.institutions_.size()});
    if (inserted) corpus_.institutions_.push_back({key, CountryId{}});
    return it->second;
  }

  CountryId intern_country(const std::string& key) {
    auto [it, inserted] = corpus_.country_index_.try_emplace(key, CountryId{corpus_.country_keys_.size()});
    if (inserted) corpus_.country_keys_.push_back(key);
    return it->second;
  }

  Corpus& corpus_;
  const Corpus::IngestOptions& options_;
  int max_year_;
  std::vector<std::size_t> admitted_lines_;
};

Corpus Corpus::ingest(std::istream& in, const IngestOptions& options) {
  Corpus corpus;
  CorpusBuilder builder(corpus, options);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    builder.add_line(line, line_number);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error while ingesting corpus");
  corpus.finalize();
  return corpus;
}

void Corpus::finalize() {
  const std::size_t n = papers_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  author_papers_.assign(author_keys_.size(), {});
  journal_papers_.assign(journal_keys_.size(), {});
  min_year_ = n ? papers_.front().year : 0;
  max_year_ = n ? papers_.front().year : 0;

  for (std::size_t i = 0; i < n; ++i) {
    const PaperId citing{i};
    const Paper& p = papers_[i];
    min_year_ = std::min(min_year_, p.year);
    max_year_ = std::max(max_year_, p.year);
    for (const auto& mention : p.authors) author_papers_[mention.author.index()].push_back(citing);
    journal_papers_[p.journal.index()].push_back(citing);
    for (const auto& target : p.references) {
      const auto it = paper_index_.find(target);
      if (it == paper_index_.end()) {
        dangling_.push_back({citing, target});
        continue;
      }
      const PaperId cited = it->second;
      edges_.push_back({citing, cited});
      out_[i].push_back(cited);
      in_[cited.index()].push_back(citing);
      if (p.year < papers_[cited.index()].year - 1) anomalies_.push_back({citing, cited});
    }
  }
}

std::optional<PaperId> Corpus::find(std::string_view id) const {
  const auto it = paper_index_.find(std::string(id));
  if (it == paper_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<AuthorId> Corpus::find_author(std::string_view key) const {
  const auto it = author_index_.find(std::string(key));
  if (it == author_index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace coirank
