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

#ifndef COIRANK_NORMALIZE_HPP_
#define COIRANK_NORMALIZE_HPP_

#include <istream>
#include <map>
#include <string>
#include <string_view>

namespace coirank {

// Lower-cases ASCII, maps Latin-1 / Latin Extended-A letters to their ASCII
// base letters and turns invalid UTF-8 bytes and Latin-1 symbols into spaces.
// Other code points are passed through unchanged.
std::string fold_to_ascii(std::string_view raw);

// "A. B. Smith" and "Smith, A.B." both become "smith, a.b.". Without a comma
// the last token is the surname. Throws kInvalidArgument when nothing is left.
std::string normalize_author(std::string_view raw_name);

// Case-folded, punctuation-stripped, whitespace-collapsed key.
// Throws kInvalidArgument when nothing is left.
std::string normalize_affiliation(std::string_view raw);

// Same folding rules as affiliations; used for the optional country field.
std::string normalize_country(std::string_view raw);

// Maps normalized institution keys onto canonical ones. Both sides of the
// table are normalized on load; lookups are a single step (no chaining).
class AliasTable {
 public:
  AliasTable() = default;

  // Parses a JSON object {"raw or normalized key": "canonical key", ...}.
  static AliasTable from_json(std::istream& in);
  static AliasTable from_file(const std::string& path);

  const std::string& apply(const std::string& key) const;
  std::size_t size() const { return aliases_.size(); }
  bool empty() const { return aliases_.empty(); }

  void add(std::string_view from, std::string_view to);

 private:
  std::map<std::string, std::string, std::less<>> aliases_;
};

}  // namespace coirank

#endif  // COIRANK_NORMALIZE_HPP_
