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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "common.hpp"
#include "normalize.hpp"

namespace coirank {
namespace {

TEST(NormalizeAuthor, InitialsBeforeSurname) { EXPECT_EQ(normalize_author("A. B. Smith"), "smith, a.b."); }

TEST(NormalizeAuthor, CommaForm) { EXPECT_EQ(normalize_author("Smith, A.B."), "smith, a.b."); }

TEST(NormalizeAuthor, StripsDiacriticsAndWhitespace) {
  EXPECT_EQ(normalize_author("  \xC3\x89" "douard  Lucas "), "lucas, e.");
}

TEST(NormalizeAuthor, FullGivenNamesBecomeInitials) {
  EXPECT_EQ(normalize_author("Jane Ann Doe"), "doe, j.a.");
  EXPECT_EQ(normalize_author("Doe, Jane Ann"), "doe, j.a.");
}

TEST(NormalizeAuthor, MultiWordSurnameInCommaForm) {
  EXPECT_EQ(normalize_author("van der Berg, Pieter"), "van der berg, p.");
}

TEST(NormalizeAuthor, SurnameOnly) { EXPECT_EQ(normalize_author("Plato"), "plato"); }

TEST(NormalizeAuthor, KeepsHyphenatedSurname) {
  EXPECT_EQ(normalize_author("Marie Curie-Sklodowska"), "curie-sklodowska, m.");
}

TEST(NormalizeAuthor, EmptyIsAnError) {
  EXPECT_THROW(normalize_author(""), Error);
  EXPECT_THROW(normalize_author("   "), Error);
  EXPECT_THROW(normalize_author(".,;"), Error);
}

TEST(NormalizeAffiliation, PunctuationStripped) {
  EXPECT_EQ(normalize_affiliation("MIT"), "mit");
  EXPECT_EQ(normalize_affiliation("M.I.T."), "mit");
  EXPECT_EQ(normalize_affiliation("  Dalian  Univ. of   Technology "), "dalian univ of technology");
}

TEST(NormalizeAffiliation, SeparatorsBecomeSpaces) {
  EXPECT_EQ(normalize_affiliation("Dept. of Physics/ETH-Zurich"), "dept of physics eth zurich");
}

TEST(NormalizeAffiliation, BlankIsAnError) { EXPECT_THROW(normalize_affiliation("   "), Error); }

TEST(AliasTable, AppliedAfterNormalization) {
  std::istringstream in(R"({"Dalian Univ. of Technology": "Dalian University of Technology"})");
  const AliasTable table = AliasTable::from_json(in);
  EXPECT_EQ(table.apply(normalize_affiliation("Dalian Univ. of Technology")), "dalian university of technology");
  EXPECT_EQ(table.apply("unrelated"), "unrelated");
}

TEST(AliasTable, RejectsNonObjects) {
  std::istringstream bad("[1, 2]");
  EXPECT_THROW(AliasTable::from_json(bad), Error);
  std::istringstream broken("{");
  EXPECT_THROW(AliasTable::from_json(broken), Error);
}

TEST(AliasTable, MissingFileIsIoError) {
  try {
    AliasTable::from_file("/nonexistent/aliases.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

std::string random_text(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "a", "B", "c", " ", "  ", ".", ",", "-", "'", "\xC3\xA9", "\xC3\x96", "\xC5\x81", "\xE4\xB8\xAD",
      "\xFF", "Smith", "van", "(", ")", "/", "\t", "\xC3", "0", "9", "\xC2\xA0"};
  std::string out;
  const std::size_t n = rng() % 12;
  for (std::size_t i = 0; i < n; ++i) out += pieces[rng() % pieces.size()];
  return out;
}

TEST(NormalizeProperty, AuthorKeysAreIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const std::string raw = random_text(rng);
    std::string once;
    try {
      once = normalize_author(raw);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(normalize_author(once), once) << "raw: " << raw;
  }
}

TEST(NormalizeProperty, AffiliationKeysAreIdempotent) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const std::string raw = random_text(rng);
    std::string once;
    try {
      once = normalize_affiliation(raw);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(normalize_affiliation(once), once) << "raw: " << raw;
  }
}

}  // namespace
}  // namespace coirank
