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

#include "normalize.hpp"

#include <array>
#include <fstream>
#include <vector>

#include "common.hpp"
#include "json.hpp"

namespace coirank {
namespace {

// U+00C0 .. U+00FF
constexpr std::array<const char*, 64> kLatin1 = {
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o",  " ", "o", "u", "u", "u", "u", "y", "th", "ss",
    "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
    "d", "n", "o", "o", "o", "o", "o",  " ", "o", "u", "u", "u", "u", "y", "th", "y",
};

// U+0100 .. U+017F, one base letter per code point.
constexpr std::string_view kLatinExtendedA =
    "AaAaAa" "CcCcCcCc" "DdDd" "EeEeEeEeEe" "GgGgGgGg" "HhHh" "IiIiIiIiIi" "Ii"
    "Jj" "Kkk" "LlLlLlLlLl" "NnNnNnnNn" "OoOoOoOo" "RrRrRr" "SsSsSsSs" "TtTtTt"
    "UuUuUuUuUuUu" "Ww" "YyY" "ZzZzZz" "s";
static_assert(kLatinExtendedA.size() == 128);

// Decodes one UTF-8 sequence starting at s[i]. Returns the code point and its
// length, or length 0 for an invalid sequence.
std::pair<char32_t, std::size_t> decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0, 0};
  }
  if (i + len > s.size()) return {0, 0};
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0, 0};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings so that fold(fold(x)) == fold(x).
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
      cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {0, 0};
  }
  return {cp, len};
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_ascii_punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u < 0x80 && !is_space(c) && !(c >= 'a' && c <= 'z') && !(c >= 'A' && c <= 'Z') &&
         !(c >= '0' && c <= '9') && u >= 0x20 && u != 0x7F;
}

// Splits on whitespace and collapses runs.
std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::string current;
  for (char c : s) {
    if (is_space(c)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string join(const std::vector<std::string>& words, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

// Length of the UTF-8 sequence that starts the (already folded) word.
std::size_t first_code_point_length(std::string_view word) {
  const auto [cp, len] = decode(word, 0);
  return len == 0 ? 1 : len;
}

// Name-part tokenizer: '.' and every ASCII punctuation other than '-' and
// '\'' separate tokens. Commas are handled by the caller.
std::vector<std::string> name_tokens(std::string_view folded) {
  std::string cleaned(folded);
  for (char& c : cleaned) {
    if (c == '-' || c == '\'') continue;
    if (is_ascii_punct(c)) c = ' ';
  }
  return split_words(cleaned);
}

std::string folded_key(std::string_view raw) {
  std::string folded = fold_to_ascii(raw);
  std::string cleaned;
  cleaned.reserve(folded.size());
  for (char c : folded) {
    switch (c) {
      case '-': case '/': case ',': case ';': case ':': case '(': case ')':
      case '[': case ']': case '{': case '}': case '|': case '_':
        cleaned.push_back(' ');
        break;
      default:
        if (is_ascii_punct(c)) break;
        cleaned.push_back(is_space(c) ? ' ' : c);
    }
  }
  return join(split_words(cleaned), " ");
}

}  // namespace

std::string fold_to_ascii(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    const auto [cp, len] = decode(raw, i);
    if (len == 0) {
      out.push_back(' ');
      ++i;
      continue;
    }
    if (cp < 0x80) {
      const char c = static_cast<char>(cp);
      if (c >= 'A' && c <= 'Z') {
        out.push_back(static_cast<char>(c - 'A' + 'a'));
      } else if (cp < 0x20 || cp == 0x7F) {
        out.push_back(' ');
      } else {
        out.push_back(c);
      }
    } else if (cp < 0xC0) {
      out.push_back(' ');  // NBSP, currency signs, guillemets...
    } else if (cp < 0x100) {
      out += kLatin1[cp - 0xC0];
    } else if (cp < 0x180) {
      const char base = kLatinExtendedA[cp - 0x100];
      out.push_back(base >= 'A' && base <= 'Z' ? static_cast<char>(base - 'A' + 'a') : base);
    } else {
      out.append(raw.substr(i, len));
    }
    i += len;
  }
  return out;
}

std::string normalize_author(std::string_view raw_name) {
  const std::string folded = fold_to_ascii(raw_name);
  std::vector<std::string> surname;
  std::vector<std::string> given;

  const auto comma = folded.find(',');
  if (comma != std::string::npos) {
    surname = name_tokens(std::string_view(folded).substr(0, comma));
    std::string rest = folded.substr(comma + 1);
    for (char& c : rest) {
      if (c == ',') c = ' ';
    }
    given = name_tokens(rest);
    if (given.empty()) surname.clear();
  }
  if (surname.empty()) {
    std::string all = folded;
    for (char& c : all) {
      if (c == ',') c = ' ';
    }
    given = name_tokens(all);
    if (given.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "author name is empty after normalization: '" + std::string(raw_name) + "'");
    }
    surname.push_back(given.back());
    given.pop_back();
  }

  std::string key = join(surname, " ");
  if (!given.empty()) {
    key += ", ";
    for (const auto& token : given) {
      key.append(token, 0, first_code_point_length(token));
      key.push_back('.');
    }
  }
  return key;
}

std::string normalize_affiliation(std::string_view raw) {
  std::string key = folded_key(raw);
  if (key.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "affiliation is empty after normalization: '" + std::string(raw) + "'");
  }
  return key;
}

std::string normalize_country(std::string_view raw) {
  std::string key = folded_key(raw);
  if (key.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "country is empty after normalization: '" + std::string(raw) + "'");
  }
  return key;
}

AliasTable AliasTable::from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("alias table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParse, "alias table must be a JSON object of key -> canonical key");
  }
  AliasTable table;
  for (const auto& [from, to] : doc.items()) {
    if (!to.is_string()) {
      throw Error(ErrorCode::kParse, "alias table value for '" + from + "' is not a string");
    }
    table.add(from, to.get<std::string>());
  }
  return table;
}

AliasTable AliasTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open alias file '" + path + "'");
  return from_json(in);
}

void AliasTable::add(std::string_view from, std::string_view to) {
  aliases_.insert_or_assign(normalize_affiliation(from), normalize_affiliation(to));
}

const std::string& AliasTable::apply(const std::string& key) const {
  const auto it = aliases_.find(key);
  return it == aliases_.end() ? key : it->second;
}

}  // namespace coirank
