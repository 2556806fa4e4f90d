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

#include "rank_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace coirank {
namespace {

void check_unit_interval(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("{} must lie in [0, 1] (got {})", name, v));
  }
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPandora: return "pandora";
    case Algorithm::kCajtRank: return "cajtrank";
    case Algorithm::kFutureRank: return "futurerank";
  }
  return "pandora";
}

std::optional<Algorithm> algorithm_from_string(std::string_view s) {
  for (const Algorithm a : kAllAlgorithms) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

void RankParams::validate() const {
  check_unit_interval("alpha", alpha);
  check_unit_interval("beta", beta);
  check_unit_interval("gamma", gamma);
  check_unit_interval("delta", delta);
  if (mixing_mass() > kMaxMixingMass + 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("alpha+beta+gamma+delta = {} exceeds {}; the random jump must keep at least 0.15",
                            mixing_mass(), kMaxMixingMass));
  }
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("epsilon must be > 0 (got {})", epsilon));
  }
  if (max_iters < 1) {
    throw Error(ErrorCode::kInvalidArgument, fmt::format("max-iters must be >= 1 (got {})", max_iters));
  }
}

RankGraph RankGraph::from_edges(const Corpus& corpus, std::span<const WeightedEdge> edges) {
  RankGraph g;
  const std::size_t n = corpus.paper_count();
  g.in_.assign(n, {});
  g.out_degree_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) g.out_degree_[i] = corpus.references_of(PaperId{i}).size();
  for (const WeightedEdge& e : edges) g.in_[e.cited.index()].push_back({e.citing, e.weight});
  for (auto& links : g.in_) {
    std::sort(links.begin(), links.end(), [](const InLink& a, const InLink& b) { return a.citer < b.citer; });
  }
  return g;
}

RankGraph RankGraph::unit(const Corpus& corpus) {
  RankGraph g;
  const std::size_t n = corpus.paper_count();
  g.in_.assign(n, {});
  g.out_degree_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    g.out_degree_[i] = corpus.references_of(PaperId{i}).size();
    for (const PaperId citer : corpus.citers_of(PaperId{i})) g.in_[i].push_back({citer, 1.0});
    std::sort(g.in_[i].begin(), g.in_[i].end(),
              [](const InLink& a, const InLink& b) { return a.citer < b.citer; });
  }
  return g;
}

void RankGraph::set_weight(PaperId citing, PaperId cited, double weight) {
  for (auto& link : in_[cited.index()]) {
    if (link.citer == citing) {
      link.weight = weight;
      return;
    }
  }
  throw Error(ErrorCode::kNotFound, "no such citation in rank graph");
}

std::vector<double> weighted_pagerank_step(const RankGraph& graph, std::span<const double> scores) {
  const std::size_t n = graph.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  double dangling = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (graph.out_degree(PaperId{j}) == 0) dangling += scores[j];
  }
  const double dangling_share = dangling / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto& link : graph.in_links(PaperId{i})) {
      sum += link.weight / static_cast<double>(graph.out_degree(link.citer)) * scores[link.citer.index()];
    }
    out[i] = sum + dangling_share;
  }
  return out;
}

std::vector<double> author_score_step(const Corpus& corpus, const CreditTable& credit,
                                      std::span<const double> scores) {
  std::vector<double> hub(corpus.author_count(), 0.0);
  for (std::size_t k = 0; k < corpus.paper_count(); ++k) {
    for (const auto& s : credit.shares(PaperId{k})) hub[s.author.index()] += s.share * scores[k];
  }
  double total = 0.0;
  for (std::size_t a = 0; a < hub.size(); ++a) {
    hub[a] /= static_cast<double>(corpus.papers_of_author(AuthorId{a}).size());
    total += hub[a];
  }
  std::vector<double> out(corpus.paper_count(), 0.0);
  if (total <= 0.0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double sum = 0.0;
    for (const auto& m : corpus.papers()[i].authors) sum += hub[m.author.index()];
    out[i] = sum / total;
  }
  return out;
}

std::vector<double> journal_score_step(const Corpus& corpus, std::span<const double> scores) {
  std::vector<double> hub(corpus.journal_count(), 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < hub.size(); ++j) {
    const auto papers = corpus.papers_of_journal(JournalId{j});
    if (papers.empty()) continue;
    double sum = 0.0;
    for (const PaperId p : papers) sum += scores[p.index()];
    hub[j] = sum / static_cast<double>(papers.size());
    total += hub[j];
  }
  std::vector<double> out(corpus.paper_count(), 0.0);
  if (total <= 0.0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = hub[corpus.papers()[i].journal.index()] / total;
  return out;
}

std::vector<double> reference_score_step(const Corpus& corpus, std::span<const double> scores) {
  const std::size_t n = corpus.paper_count();
  std::vector<double> hub(n, 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto refs = corpus.references_of(PaperId{j});
    if (refs.empty()) continue;
    double sum = 0.0;
    for (const PaperId r : refs) sum += scores[r.index()];
    hub[j] = sum / static_cast<double>(refs.size());
    total += hub[j];
  }
  std::vector<double> out(n, 0.0);
  if (total <= 0.0) return out;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const PaperId citer : corpus.citers_of(PaperId{i})) sum += hub[citer.index()];
    out[i] = sum / total;
  }
  return out;
}

std::vector<double> combine_scores(const ComponentScores& c, const RankParams& params,
                                   std::span<const double> jump) {
  const std::size_t n = c.wpr.size();
  std::vector<double> out(n, 0.0);
  const double uniform = n ? 1.0 / static_cast<double>(n) : 0.0;
  const double jump_mass = params.random_jump();
  for (std::size_t i = 0; i < n; ++i) {
    const double teleport = jump.empty() ? uniform : jump[i];
    out[i] = params.alpha * c.wpr[i] + params.beta * c.author[i] + params.gamma * c.journal[i] +
             params.delta * c.reference[i] + jump_mass * teleport;
  }
  return out;
}

RankResult run_to_convergence(const Corpus& corpus, const RankGraph& graph, const CreditTable& credit,
                              const RankParams& params, std::span<const double> jump, unsigned threads) {
  params.validate();
  const std::size_t n = corpus.paper_count();
  if (!jump.empty() && jump.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "random-jump distribution does not match the corpus size");
  }
  RankResult result;
  result.params = params;
  RankState& state = result.state;
  state.scores.assign(n, n ? 1.0 / static_cast<double>(n) : 0.0);
  if (n == 0) {
    state.converged = true;
    return result;
  }

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    const std::span<const double> prev(state.scores);
    ComponentScores comps;
    // The four components only read `prev`, so they can be computed side by side.
    parallel_for(4, threads >= 4 ? 4 : 1, [&](std::size_t which) {
      switch (which) {
        case 0: comps.wpr = weighted_pagerank_step(graph, prev); break;
        case 1: comps.author = author_score_step(corpus, credit, prev); break;
        case 2: comps.journal = journal_score_step(corpus, prev); break;
        default: comps.reference = reference_score_step(corpus, prev); break;
      }
    });
    std::vector<double> next = combine_scores(comps, params, jump);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - prev[i]));
    state.scores = std::move(next);
    state.components = std::move(comps);
    state.iterations = iter;
    state.last_delta = delta;
    state.delta_trace.push_back(delta);
    if (delta < params.epsilon) {
      state.converged = true;
      break;
    }
  }
  result.order = ranked_order(corpus, state.scores);
  return result;
}

std::vector<PaperId> ranked_order(const Corpus& corpus, std::span<const double> scores) {
  std::vector<PaperId> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = PaperId{i};
  std::sort(order.begin(), order.end(), [&](PaperId a, PaperId b) {
    const double sa = scores[a.index()];
    const double sb = scores[b.index()];
    if (sa != sb) return sa > sb;
    const Paper& pa = corpus.paper(a);
    const Paper& pb = corpus.paper(b);
    if (pa.year != pb.year) return pa.year < pb.year;
    return pa.id < pb.id;
  });
  return order;
}

RankResult cajtrank_baseline(const Corpus& corpus, const CreditTable& uniform_credit, const RankParams& params,
                             unsigned threads) {
  RankResult r = run_to_convergence(corpus, RankGraph::unit(corpus), uniform_credit, params, {}, threads);
  r.algorithm = Algorithm::kCajtRank;
  return r;
}

std::vector<double> age_decay_distribution(const Corpus& corpus, const DecayParams& decay) {
  std::vector<double> p(corpus.paper_count(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double age = static_cast<double>(decay.current_year - corpus.papers()[i].year);
    p[i] = std::exp(-decay.rho * age);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

RankResult futurerank_baseline(const Corpus& corpus, const CreditTable& uniform_credit,
                               const RankParams& params, const DecayParams& decay, unsigned threads) {
  RankParams no_journal = params;
  no_journal.gamma = 0.0;
  const std::vector<double> jump = age_decay_distribution(corpus, decay);
  RankResult r = run_to_convergence(corpus, RankGraph::unit(corpus), uniform_credit, no_journal, jump, threads);
  r.algorithm = Algorithm::kFutureRank;
  return r;
}

void write_ranking_csv(std::ostream& out, const Corpus& corpus, const RankResult& result) {
  out << "rank,paper_id,score,wpr,author,journal,reference\n";
  const auto& s = result.state;
  for (std::size_t r = 0; r < result.order.size(); ++r) {
    const std::size_t i = result.order[r].index();
    out << (r + 1) << ',' << csv_escape(corpus.paper(result.order[r]).id) << ','
        << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}", s.scores[i], s.components.wpr[i],
                       s.components.author[i], s.components.journal[i], s.components.reference[i])
        << '\n';
  }
}

}  // namespace coirank
