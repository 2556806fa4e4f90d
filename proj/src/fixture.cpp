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

#include "fixture.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "common.hpp"
#include "json.hpp"

namespace coirank {
namespace {

// std::uniform_*_distribution differ between standard libraries, so draws
// are derived from the raw engine output.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

struct FixtureAuthor {
  std::string name;
  std::size_t institution;
};

struct FixturePaper {
  std::string id;
  int year;
  std::size_t journal;
  std::vector<FixtureAuthor> authors;
  std::vector<std::size_t> institutions;  // sorted, unique
  std::vector<std::size_t> references;
};

bool share_institution(const FixturePaper& a, const FixturePaper& b) {
  auto i = a.institutions.begin();
  auto j = b.institutions.begin();
  while (i != a.institutions.end() && j != b.institutions.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

void FixtureOptions::validate() const {
  if (papers < 2) throw Error(ErrorCode::kInvalidArgument, "a fixture needs at least 2 papers");
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("injection rate {} is outside [0, 1]", rate));
  }
  if (countries == 0 || journals == 0) {
    throw Error(ErrorCode::kInvalidArgument, "countries and journals must be positive");
  }
  if (min_refs > max_refs) throw Error(ErrorCode::kInvalidArgument, "min_refs must not exceed max_refs");
  if (last_year < first_year) throw Error(ErrorCode::kInvalidArgument, "last_year precedes first_year");
}

void write_fixture(std::ostream& out, const FixtureOptions& options) {
  options.validate();
  Draw draw(options.seed);
  const std::size_t n = options.papers;
  const std::size_t n_groups =
      options.groups != 0 ? options.groups
                          : std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(options.rate * n / 100.0)));
  const std::size_t pool = options.institutions != 0 ? options.institutions : std::max<std::size_t>(8, n / 20);

  // Institutions [0, pool) are shared; each group owns two more after them.
  std::vector<std::string> institution_names;
  for (std::size_t m = 0; m < pool; ++m) institution_names.push_back(fmt::format("Institute {}", m));
  for (std::size_t g = 0; g < n_groups; ++g) {
    institution_names.push_back(fmt::format("Group {} Laboratory", g));
    institution_names.push_back(fmt::format("Group {} Annex", g));
  }
  auto group_institution = [&](std::size_t g, std::size_t which) { return pool + 2 * g + which; };

  std::vector<FixturePaper> papers;
  papers.reserve(n);
  std::vector<std::vector<std::size_t>> group_papers(n_groups);
  // One entry per paper plus one per normal citation received.
  std::vector<std::size_t> ballot;
  std::size_t next_author = 0;
  auto fresh_author = [&](std::size_t institution) {
    return FixtureAuthor{fmt::format("Scholar {}", next_author++), institution};
  };

  const int span = options.last_year - options.first_year + 1;
  for (std::size_t i = 0; i < n; ++i) {
    FixturePaper paper;
    paper.id = fmt::format("F{:06}", i);
    paper.year = options.first_year + static_cast<int>(i * static_cast<std::size_t>(span) / n);
    paper.journal = draw.below(options.journals);

    const bool injected = options.rate > 0.0 && draw.unit() < options.rate;
    std::size_t group = 0;
    if (injected) {
      group = draw.below(n_groups);
      if (group % 2 == 0) {
        paper.authors.push_back({fmt::format("Cartel {} Senior", group), group_institution(group, 0)});
        paper.authors.push_back({fmt::format("Cartel {} Junior", group), group_institution(group, 1)});
      } else {
        const std::size_t count = draw.between(1, 3);
        for (std::size_t a = 0; a < count; ++a) paper.authors.push_back(fresh_author(group_institution(group, 0)));
      }
    } else {
      const std::size_t count = draw.between(1, 3);
      for (std::size_t a = 0; a < count; ++a) paper.authors.push_back(fresh_author(draw.below(pool)));
    }
    for (const auto& a : paper.authors) paper.institutions.push_back(a.institution);
    std::sort(paper.institutions.begin(), paper.institutions.end());
    paper.institutions.erase(std::unique(paper.institutions.begin(), paper.institutions.end()),
                             paper.institutions.end());

    if (injected) {
      // Rings boost their founding papers.
      const auto& earlier = group_papers[group];
      const std::size_t count = std::min(options.group_refs, earlier.size());
      paper.references.insert(paper.references.end(), earlier.begin(),
                              earlier.begin() + static_cast<std::ptrdiff_t>(count));
    }

    const std::size_t wanted = injected ? draw.between(1, 2) : draw.between(options.min_refs, options.max_refs);
    std::vector<std::size_t> outside;
    for (std::size_t attempt = 0; attempt < 20 * wanted && outside.size() < wanted && !ballot.empty(); ++attempt) {
      const std::size_t candidate = ballot[draw.below(ballot.size())];
      if (std::find(paper.references.begin(), paper.references.end(), candidate) != paper.references.end()) continue;
      if (std::find(outside.begin(), outside.end(), candidate) != outside.end()) continue;
      if (share_institution(paper, papers[candidate])) continue;
      outside.push_back(candidate);
    }
    for (const std::size_t r : outside) {
      paper.references.push_back(r);
      ballot.push_back(r);
    }

    if (injected) group_papers[group].push_back(i);
    ballot.push_back(i);
    papers.push_back(std::move(paper));
  }

  for (const FixturePaper& paper : papers) {
    nlohmann::ordered_json record;
    record["id"] = paper.id;
    record["year"] = paper.year;
    record["journal"] = fmt::format("Journal {}", static_cast<char>('A' + paper.journal % 26));
    nlohmann::ordered_json authors = nlohmann::ordered_json::array();
    for (const FixtureAuthor& a : paper.authors) {
      nlohmann::ordered_json entry;
      entry["name"] = a.name;
      entry["affiliations"] = nlohmann::ordered_json::array({institution_names[a.institution]});
      entry["country"] = fmt::format("Country {}", a.institution % options.countries);
      authors.push_back(std::move(entry));
    }
    record["authors"] = std::move(authors);
    nlohmann::ordered_json refs = nlohmann::ordered_json::array();
    for (const std::size_t r : paper.references) refs.push_back(papers[r].id);
    record["references"] = std::move(refs);
    out << record.dump() << '\n';
  }
}

}  // namespace coirank
