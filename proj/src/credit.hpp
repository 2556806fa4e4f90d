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

#ifndef COIRANK_CREDIT_HPP_
#define COIRANK_CREDIT_HPP_

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "graph_index.hpp"

namespace coirank {

enum class CreditScheme {
  kCollective,   // co-citation based collective credit
  kUniform,      // 1 / |authors|
  kFirstAuthor,  // everything to the first listed author
};

std::string_view to_string(CreditScheme scheme);
std::optional<CreditScheme> credit_scheme_from_string(std::string_view s);

struct CreditShare {
  AuthorId author;
  double share = 0.0;
};

// Shares of one paper, in author-list order. Sums to 1.
std::vector<CreditShare> credit_shares(const Corpus& corpus, const Indices& indices, PaperId paper,
                                       CreditScheme scheme = CreditScheme::kCollective);

class CreditTable {
 public:
  CreditTable() = default;
  explicit CreditTable(std::vector<std::vector<CreditShare>> per_paper) : per_paper_(std::move(per_paper)) {}

  std::span<const CreditShare> shares(PaperId p) const { return per_paper_[p.index()]; }
  // 0 when the author is not on the paper.
  double share(PaperId p, AuthorId a) const;
  std::size_t paper_count() const { return per_paper_.size(); }

 private:
  std::vector<std::vector<CreditShare>> per_paper_;
};

CreditTable build_credit_table(const Corpus& corpus, const Indices& indices, CreditScheme scheme,
                               unsigned threads = 1);

// paper_id,author_key,share
void write_credit_csv(std::ostream& out, const Corpus& corpus, const CreditTable& table);

}  // namespace coirank

#endif  // COIRANK_CREDIT_HPP_
