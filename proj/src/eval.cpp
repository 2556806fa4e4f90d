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

#include "eval.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

namespace coirank {

GroundTruth build_ground_truth(const Corpus& corpus, std::span<const WeightedEdge> edges) {
  GroundTruth gt;
  gt.counts.assign(corpus.paper_count(), 0);
  for (const WeightedEdge& e : edges) {
    if (e.coi_class == CoiClass::kNormal) ++gt.counts[e.cited.index()];
  }
  gt.order.reserve(corpus.paper_count());
  for (std::size_t i = 0; i < corpus.paper_count(); ++i) gt.order.emplace_back(i);
  std::sort(gt.order.begin(), gt.order.end(), [&](PaperId a, PaperId b) {
    if (gt.counts[a.index()] != gt.counts[b.index()]) return gt.counts[a.index()] > gt.counts[b.index()];
    const Paper& pa = corpus.paper(a);
    const Paper& pb = corpus.paper(b);
    if (pa.year != pb.year) return pa.year < pb.year;
    return pa.id < pb.id;
  });
  return gt;
}

double paper_ri(std::size_t ro, std::size_t k) {
  return 1.0 + static_cast<double>(k - ro) / static_cast<double>(k);
}

double max_list_ri(std::size_t k) { return (3.0 * static_cast<double>(k) - 1.0) / 2.0; }

double ri_at_k(std::span<const PaperId> ranking, std::span<const PaperId> truth, std::size_t k, bool normalized) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (k > ranking.size() || k > truth.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("k = {} exceeds the number of ranked papers ({})", k,
                            std::min(ranking.size(), truth.size())));
  }
  std::vector<PaperId> top(truth.begin(), truth.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(top.begin(), top.end());
  double total = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    if (std::binary_search(top.begin(), top.end(), ranking[r])) total += paper_ri(r + 1, k);
  }
  return normalized ? total / max_list_ri(k) : total;
}

std::string_view to_string(SpearmanDomain d) {
  switch (d) {
    case SpearmanDomain::kUnion: return "union";
    case SpearmanDomain::kIntersection: return "intersection";
    case SpearmanDomain::kFull: return "full";
  }
  return "union";
}

std::optional<SpearmanDomain> spearman_domain_from_string(std::string_view s) {
  if (s == "union") return SpearmanDomain::kUnion;
  if (s == "intersection") return SpearmanDomain::kIntersection;
  if (s == "full") return SpearmanDomain::kFull;
  return std::nullopt;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

SpearmanResult spearman_at_k(std::span<const PaperId> ranking, std::span<const PaperId> truth, std::size_t k,
                             SpearmanDomain domain) {
  if (domain == SpearmanDomain::kFull) k = std::min(ranking.size(), truth.size());
  if (k == 0 || k > ranking.size() || k > truth.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("k = {} exceeds the number of ranked papers ({})", k,
                            std::min(ranking.size(), truth.size())));
  }
  std::unordered_map<std::uint32_t, std::size_t> pos_r, pos_t;
  for (std::size_t i = 0; i < k; ++i) pos_r.emplace(ranking[i].value, i + 1);
  for (std::size_t i = 0; i < k; ++i) pos_t.emplace(truth[i].value, i + 1);

  // Domain in a fixed order: ranking's top-k first, then truth-only papers.
  std::vector<std::uint32_t> members;
  for (std::size_t i = 0; i < k; ++i) {
    const bool in_truth = pos_t.count(ranking[i].value) != 0;
    if (domain != SpearmanDomain::kIntersection || in_truth) members.push_back(ranking[i].value);
  }
  if (domain != SpearmanDomain::kIntersection) {
    for (std::size_t i = 0; i < k; ++i) {
      if (pos_r.count(truth[i].value) == 0) members.push_back(truth[i].value);
    }
  }
  const double penalty = static_cast<double>(members.size() + 1);
  std::vector<double> xr, xt;
  xr.reserve(members.size());
  xt.reserve(members.size());
  for (const std::uint32_t m : members) {
    const auto r = pos_r.find(m);
    const auto t = pos_t.find(m);
    xr.push_back(r == pos_r.end() ? penalty : static_cast<double>(r->second));
    xt.push_back(t == pos_t.end() ? penalty : static_cast<double>(t->second));
  }
  const auto rho = pearson(xr, xt);
  if (!rho) return {0.0, true};
  return {*rho, false};
}

void EvalOptions::validate() const {
  if (k_min == 0) throw Error(ErrorCode::kInvalidArgument, "k-min must be at least 1");
  if (k_step == 0) throw Error(ErrorCode::kInvalidArgument, "k-step must be at least 1");
  if (k_max < k_min) throw Error(ErrorCode::kInvalidArgument, "k-max must not be below k-min");
}

std::vector<std::size_t> k_values(const EvalOptions& options, std::size_t n, std::vector<std::string>* warnings) {
  options.validate();
  std::vector<std::size_t> ks;
  std::size_t dropped = 0;
  for (std::size_t k = options.k_min; k <= options.k_max; k += options.k_step) {
    if (k <= n) {
      ks.push_back(k);
    } else {
      ++dropped;
    }
  }
  if (dropped > 0 && warnings != nullptr) {
    warnings->push_back(fmt::format("dropped {} k value(s) larger than the corpus ({} papers)", dropped, n));
  }
  return ks;
}

const EvalRow* EvalTable::find(Algorithm algo, std::size_t k) const {
  for (const EvalRow& row : rows) {
    if (row.algorithm == algo && row.k == k) return &row;
  }
  return nullptr;
}

EvalTable compare_algorithms(const Corpus& corpus, const GroundTruth& truth,
                             std::span<const RankResult* const> results, const EvalOptions& options,
                             unsigned threads) {
  EvalTable table;
  const std::vector<std::size_t> ks = k_values(options, corpus.paper_count(), &table.warnings);
  table.rows.resize(ks.size() * results.size());
  std::vector<char> degenerate(table.rows.size(), 0);
  parallel_for(ks.size(), threads, [&](std::size_t ki) {
    for (std::size_t a = 0; a < results.size(); ++a) {
      const RankResult& result = *results[a];
      EvalRow& row = table.rows[ki * results.size() + a];
      row.k = ks[ki];
      row.algorithm = result.algorithm;
      row.ri = ri_at_k(result.order, truth.order, row.k, options.ri_normalized);
      const SpearmanResult s = spearman_at_k(result.order, truth.order, row.k, options.domain);
      row.spearman = s.value;
      degenerate[ki * results.size() + a] = s.degenerate ? 1 : 0;
    }
  });
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (degenerate[i]) {
      table.warnings.push_back(fmt::format("spearman at k = {} for {} is degenerate; reported as 0",
                                           table.rows[i].k, to_string(table.rows[i].algorithm)));
    }
  }
  return table;
}

void write_eval_csv(std::ostream& out, const EvalTable& table) {
  out << "k,algo,ri,spearman\n";
  for (const EvalRow& row : table.rows) {
    out << row.k << ',' << to_string(row.algorithm) << ',' << fmt::format("{:.17g}", row.ri) << ','
        << fmt::format("{:.17g}", row.spearman) << '\n';
  }
}

TuningResult grid_search(const Ranker& ranker, const GroundTruth& truth, const RankParams& base,
                         std::span<const std::size_t> ks, bool fix_gamma_zero, double step) {
  if (ks.empty()) throw Error(ErrorCode::kInvalidArgument, "grid search needs at least one k value");
  if (!(step > 0.0) || step > base.mixing_mass()) {
    throw Error(ErrorCode::kInvalidArgument, "grid step must be in (0, mixing mass]");
  }
  const int units = static_cast<int>(std::lround(base.mixing_mass() / step));
  TuningResult best;
  best.objective = -1.0;
  for (int a = 0; a <= units; ++a) {
    for (int b = 0; a + b <= units; ++b) {
      for (int g = 0; a + b + g <= units; ++g) {
        if (fix_gamma_zero && g != 0) continue;
        RankParams p = base;
        p.alpha = a * step;
        p.beta = b * step;
        p.gamma = g * step;
        p.delta = (units - a - b - g) * step;
        const std::vector<PaperId> order = ranker(p);
        double objective = 0.0;
        for (const std::size_t k : ks) objective += ri_at_k(order, truth.order, k, true);
        objective /= static_cast<double>(ks.size());
        ++best.evaluated;
        if (objective > best.objective) {
          best.objective = objective;
          best.params = p;
        }
      }
    }
  }
  return best;
}

}  // namespace coirank
