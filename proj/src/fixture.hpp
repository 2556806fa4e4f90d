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

#ifndef COIRANK_FIXTURE_HPP_
#define COIRANK_FIXTURE_HPP_

#include <cstdint>
#include <ostream>

namespace coirank {

struct FixtureOptions {
  std::uint64_t seed = 1;
  std::size_t papers = 1000;
  // Probability that a paper belongs to a COI group instead of the normal pool.
  double rate = 0.0;
  std::size_t groups = 0;        // 0 = about one group per 100 group papers, at least 2
  std::size_t institutions = 0;  // 0 = max(8, papers / 20)
  std::size_t countries = 6;
  std::size_t journals = 1;
  std::size_t min_refs = 1;
  std::size_t max_refs = 6;
  std::size_t group_refs = 3;  // founding group papers cited by each group paper
  int first_year = 1990;
  int last_year = 2013;

  void validate() const;
};

// Writes a JSON-Lines corpus shaped as a preferential-attachment citation DAG.
//
// Normal papers get fresh authors, institutions from a shared pool, and cite
// earlier papers in proportion to their normal in-degree, never one that
// shares an institution. Group papers alternate between two-author cartels
// (the same pair on every paper) and same-institution cliques; each cites
// the founding papers of its own group and one or two outside papers.
//
// Output depends only on the options, including across platforms.
void write_fixture(std::ostream& out, const FixtureOptions& options);

}  // namespace coirank

#endif  // COIRANK_FIXTURE_HPP_
