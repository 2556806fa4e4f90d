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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace coirank {
namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw Error(ErrorCode::kInvalidArgument, fmt::format("invalid value '{}' for {}: expected {}", value, key, expected));
}

double parse_double(std::string_view key, std::string_view raw) {
  const std::string v = trimmed(raw);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    bad_value(key, raw, "a number");
  }
  if (used != v.size() || !std::isfinite(out)) bad_value(key, raw, "a finite number");
  return out;
}

template <typename T>
T parse_integer(std::string_view key, std::string_view raw) {
  const std::string v = trimmed(raw);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) bad_value(key, raw, "an integer");
  return out;
}

bool parse_bool(std::string_view key, std::string_view raw) {
  const std::string v = lower(trimmed(raw));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, raw, "true or false");
}

std::vector<std::string> split_list(std::string_view raw) {
  std::vector<std::string> out;
  std::string current;
  for (char c : raw) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string class_list(const CoiStatsOptions& coic) {
  std::string out;
  for (std::size_t c = 0; c < kCoiClassCount; ++c) {
    if (!coic.classes[c]) continue;
    if (!out.empty()) out += ',';
    out += to_string(static_cast<CoiClass>(c));
  }
  return out;
}

}  // namespace

const std::vector<std::string_view>& RunConfig::keys() {
  static const std::vector<std::string_view> k = {
      "alpha",        "beta",          "gamma",         "delta",       "epsilon",         "max-iters",
      "rho",          "eval-year",     "coi-window",    "max-year",    "credit-scheme",   "coic-attribution",
      "coic-classes", "k-min",         "k-max",         "k-step",      "ri-normalized",   "spearman-domain",
      "algo",         "grid-search",   "grid-step",     "alias-file",  "dump-indices",    "dump-credit",
      "threads",      "seed",          "papers",        "rate"};
  return k;
}

void RunConfig::set(std::string_view key, std::string_view value) {
  if (key == "alpha") {
    rank.alpha = parse_double(key, value);
  } else if (key == "beta") {
    rank.beta = parse_double(key, value);
  } else if (key == "gamma") {
    rank.gamma = parse_double(key, value);
  } else if (key == "delta") {
    rank.delta = parse_double(key, value);
  } else if (key == "epsilon") {
    rank.epsilon = parse_double(key, value);
  } else if (key == "max-iters") {
    rank.max_iters = parse_integer<int>(key, value);
  } else if (key == "rho") {
    rho = parse_double(key, value);
  } else if (key == "eval-year") {
    eval_year = parse_integer<int>(key, value);
  } else if (key == "coi-window") {
    coi_window = parse_integer<int>(key, value);
  } else if (key == "max-year") {
    max_year = parse_integer<int>(key, value);
  } else if (key == "credit-scheme") {
    const auto s = credit_scheme_from_string(lower(trimmed(value)));
    if (!s) bad_value(key, value, "collective, uniform or first-author");
    credit_scheme = *s;
  } else if (key == "coic-attribution") {
    const auto a = coic_attribution_from_string(lower(trimmed(value)));
    if (!a) bad_value(key, value, "cited, citing or both");
    coic.attribution = *a;
  } else if (key == "coic-classes") {
    std::array<bool, kCoiClassCount> classes{};
    const auto items = split_list(value);
    if (items.empty()) bad_value(key, value, "a comma-separated list of COI classes");
    for (const std::string& item : items) {
      std::string upper = item;
      std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
      if (upper == "ALL") {
        for (std::size_t c = 1; c < kCoiClassCount; ++c) classes[c] = true;
        continue;
      }
      const auto cls = coi_class_from_string(upper);
      if (!cls) bad_value(key, value, "class names such as NEGATIVE_COI or 'all'");
      classes[static_cast<std::size_t>(*cls)] = true;
    }
    coic.classes = classes;
  } else if (key == "k-min") {
    eval.k_min = parse_integer<std::size_t>(key, value);
  } else if (key == "k-max") {
    eval.k_max = parse_integer<std::size_t>(key, value);
  } else if (key == "k-step") {
    eval.k_step = parse_integer<std::size_t>(key, value);
  } else if (key == "ri-normalized") {
    eval.ri_normalized = parse_bool(key, value);
  } else if (key == "spearman-domain") {
    const auto d = spearman_domain_from_string(lower(trimmed(value)));
    if (!d) bad_value(key, value, "union, intersection or full");
    eval.domain = *d;
  } else if (key == "algo") {
    std::vector<Algorithm> chosen;
    const auto items = split_list(value);
    if (items.empty()) bad_value(key, value, "pandora, cajtrank, futurerank or all");
    for (const std::string& item : items) {
      const std::string name = lower(item);
      if (name == "all") {
        chosen.assign(kAllAlgorithms.begin(), kAllAlgorithms.end());
        continue;
      }
      const auto a = algorithm_from_string(name);
      if (!a) bad_value(key, value, "pandora, cajtrank, futurerank or all");
      if (std::find(chosen.begin(), chosen.end(), *a) == chosen.end()) chosen.push_back(*a);
    }
    algorithms = std::move(chosen);
  } else if (key == "grid-search") {
    grid_search = parse_bool(key, value);
  } else if (key == "grid-step") {
    grid_step = parse_double(key, value);
  } else if (key == "alias-file") {
    alias_file = trimmed(value);
  } else if (key == "dump-indices") {
    dump_indices = parse_bool(key, value);
  } else if (key == "dump-credit") {
    dump_credit = parse_bool(key, value);
  } else if (key == "threads") {
    threads = parse_integer<unsigned>(key, value);
  } else if (key == "seed") {
    fixture.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "papers") {
    fixture.papers = parse_integer<std::size_t>(key, value);
  } else if (key == "rate") {
    fixture.rate = parse_double(key, value);
  } else {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("unknown configuration key '{}'", key));
  }
}

void RunConfig::validate() const {
  rank.validate();
  if (!(rho > 0.0)) throw Error(ErrorCode::kInvalidArgument, fmt::format("rho must be > 0 (got {})", rho));
  if (coi_window < 0) throw Error(ErrorCode::kInvalidArgument, "coi-window must not be negative");
  if (eval_year < 0) throw Error(ErrorCode::kInvalidArgument, "eval-year must not be negative");
  if (max_year < 0) throw Error(ErrorCode::kInvalidArgument, "max-year must not be negative");
  if (algorithms.empty()) throw Error(ErrorCode::kInvalidArgument, "no ranking algorithm selected");
  if (!(grid_step > 0.0) || grid_step > kMaxMixingMass) {
    throw Error(ErrorCode::kInvalidArgument, "grid-step must be in (0, 0.85]");
  }
  eval.validate();
  fixture.validate();
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["alpha"] = rank.alpha;
  j["beta"] = rank.beta;
  j["gamma"] = rank.gamma;
  j["delta"] = rank.delta;
  j["epsilon"] = rank.epsilon;
  j["max-iters"] = rank.max_iters;
  j["rho"] = rho;
  j["eval-year"] = eval_year;
  j["coi-window"] = coi_window;
  j["max-year"] = max_year;
  j["credit-scheme"] = to_string(credit_scheme);
  j["coic-attribution"] = to_string(coic.attribution);
  j["coic-classes"] = class_list(coic);
  j["k-min"] = eval.k_min;
  j["k-max"] = eval.k_max;
  j["k-step"] = eval.k_step;
  j["ri-normalized"] = eval.ri_normalized;
  j["spearman-domain"] = to_string(eval.domain);
  std::string algos;
  for (const Algorithm a : algorithms) {
    if (!algos.empty()) algos += ',';
    algos += to_string(a);
  }
  j["algo"] = algos;
  j["grid-search"] = grid_search;
  j["grid-step"] = grid_step;
  j["alias-file"] = alias_file;
  j["dump-indices"] = dump_indices;
  j["dump-credit"] = dump_credit;
  j["threads"] = threads;
  j["seed"] = fixture.seed;
  j["papers"] = fixture.papers;
  j["rate"] = fixture.rate;
  return j;
}

}  // namespace coirank
