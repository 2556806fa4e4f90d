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

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rank_engine.hpp"

namespace coirank {
namespace {

Corpus ingest(const std::string& text) {
  std::istringstream in(text);
  Corpus::IngestOptions options;
  options.max_year = 2030;
  return Corpus::ingest(in, options);
}

// n solo-authored papers with the given references, one journal, one year.
std::string graph_jsonl(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        int year = 2005) {
  std::vector<std::vector<std::size_t>> refs(n);
  for (const auto& [from, to] : edges) refs[from].push_back(to);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    out += R"({"id":"n)" + std::to_string(100 + i) + R"(","year":)" + std::to_string(year) +
           R"(,"journal":"J","authors":[{"name":"Author )" + std::to_string(i) + R"("}],"references":[)";
    for (std::size_t k = 0; k < refs[i].size(); ++k) {
      if (k) out += ',';
      out += "\"n" + std::to_string(100 + refs[i][k]) + "\"";
    }
    out += "]}\n";
  }
  return out;
}

RankParams wpr_only(double alpha) {
  RankParams p;
  p.alpha = alpha;
  p.beta = p.gamma = p.delta = 0.0;
  p.epsilon = 1e-13;
  p.max_iters = 10000;
  return p;
}

TEST(WeightedPageRankStep, TwoCycleSwapsMass) {
  const Corpus c = ingest(graph_jsonl(2, {{0, 1}, {1, 0}}));
  const RankGraph g = RankGraph::unit(c);
  const std::vector<double> s = {0.7, 0.3};
  const auto next = weighted_pagerank_step(g, s);
  EXPECT_DOUBLE_EQ(next[0], 0.3);
  EXPECT_DOUBLE_EQ(next[1], 0.7);
}

TEST(WeightedPageRankStep, WeightTimesScoreOverOutDegree) {
  // 0 cites 1 and 2; 1 and 2 are dangling.
  const Corpus c = ingest(graph_jsonl(3, {{0, 1}, {0, 2}}));
  RankGraph g = RankGraph::unit(c);
  g.set_weight(PaperId{std::size_t{0}}, PaperId{std::size_t{1}}, 0.5);
  const std::vector<double> s = {0.6, 0.3, 0.1};
  const auto next = weighted_pagerank_step(g, s);
  const double dangling = (0.3 + 0.1) / 3.0;
  EXPECT_DOUBLE_EQ(next[0], dangling);
  EXPECT_DOUBLE_EQ(next[1], 0.5 * 0.6 / 2.0 + dangling);
  EXPECT_DOUBLE_EQ(next[2], 1.0 * 0.6 / 2.0 + dangling);
  EXPECT_THROW(g.set_weight(PaperId{std::size_t{1}}, PaperId{std::size_t{0}}, 0.5), Error);
}

TEST(WeightedPageRankStep, IsLinear) {
  const Corpus c = testing::random_corpus(4, {.papers = 25});
  const RankGraph g = RankGraph::unit(c);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(c.paper_count()), y(c.paper_count()), z(c.paper_count());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = u(rng);
    y[i] = u(rng);
    z[i] = 2.0 * x[i] + 3.0 * y[i];
  }
  const auto sx = weighted_pagerank_step(g, x);
  const auto sy = weighted_pagerank_step(g, y);
  const auto sz = weighted_pagerank_step(g, z);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(sz[i], 2.0 * sx[i] + 3.0 * sy[i], 1e-12);
}

TEST(AuthorStep, HubIsMeanCreditedScore) {
  // Ann writes p0 and p1 alone; Bo writes p2 alone.
  const Corpus c = ingest(R"({"id":"p0","year":2000,"authors":[{"name":"Ann Lee"}]}
{"id":"p1","year":2000,"authors":[{"name":"Ann Lee"}]}
{"id":"p2","year":2000,"authors":[{"name":"Bo Kim"}]}
)");
  const CreditTable credit = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  const std::vector<double> s = {0.6, 0.2, 0.2};
  const auto out = author_score_step(c, credit, s);
  // h(Ann) = 0.4, h(Bo) = 0.2, total 0.6.
  EXPECT_DOUBLE_EQ(out[0], 0.4 / 0.6);
  EXPECT_DOUBLE_EQ(out[1], 0.4 / 0.6);
  EXPECT_DOUBLE_EQ(out[2], 0.2 / 0.6);
}

TEST(AuthorStep, SumsOverAuthorsOfAPaper) {
  const Corpus c = ingest(R"({"id":"p0","year":2000,"authors":[{"name":"Ann Lee"},{"name":"Bo Kim"}]}
{"id":"p1","year":2000,"authors":[{"name":"Bo Kim"}]}
)");
  const CreditTable credit = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  const std::vector<double> s = {0.5, 0.5};
  const auto out = author_score_step(c, credit, s);
  // h(Ann) = 0.25; h(Bo) = (0.25 + 0.5) / 2 = 0.375; T = 0.625.
  EXPECT_DOUBLE_EQ(out[0], (0.25 + 0.375) / 0.625);
  EXPECT_DOUBLE_EQ(out[1], 0.375 / 0.625);
}

TEST(JournalAndReferenceSteps, Examples) {
  const Corpus c = ingest(R"({"id":"p0","year":2000,"journal":"J1","authors":[{"name":"Ann Lee"}]}
{"id":"p1","year":2001,"journal":"J1","authors":[{"name":"Bo Kim"}],"references":["p0"]}
{"id":"p2","year":2002,"journal":"J2","authors":[{"name":"Cy Ng"}],"references":["p0","p1"]}
)");
  const std::vector<double> s = {0.5, 0.3, 0.2};
  const auto j = journal_score_step(c, s);
  // h(J1) = 0.4, h(J2) = 0.2.
  EXPECT_DOUBLE_EQ(j[0], 0.4 / 0.6);
  EXPECT_DOUBLE_EQ(j[1], 0.4 / 0.6);
  EXPECT_DOUBLE_EQ(j[2], 0.2 / 0.6);
  const auto r = reference_score_step(c, s);
  // h(p1) = 0.5, h(p2) = 0.4, total 0.9.
  EXPECT_DOUBLE_EQ(r[0], (0.5 + 0.4) / 0.9);
  EXPECT_DOUBLE_EQ(r[1], 0.4 / 0.9);
  EXPECT_DOUBLE_EQ(r[2], 0.0);
}

TEST(Combine, MixesComponents) {
  ComponentScores comps{{0.5, 0.5}, {0.2, 0.8}, {1.0, 0.0}, {0.0, 1.0}};
  const RankParams p;
  const auto out = combine_scores(comps, p);
  EXPECT_DOUBLE_EQ(out[0], 0.4 * 0.5 + 0.15 * 0.2 + 0.15 * 1.0 + 0.15 * 0.0 + 0.15 * 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.4 * 0.5 + 0.15 * 0.8 + 0.15 * 0.0 + 0.15 * 1.0 + 0.15 * 0.5);
  const std::vector<double> jump = {0.9, 0.1};
  const auto biased = combine_scores(comps, p, jump);
  EXPECT_DOUBLE_EQ(biased[0], 0.4 * 0.5 + 0.15 * 0.2 + 0.15 * 1.0 + 0.15 * 0.0 + 0.15 * 0.9);
  EXPECT_DOUBLE_EQ(biased[1], 0.4 * 0.5 + 0.15 * 0.8 + 0.15 * 0.0 + 0.15 * 1.0 + 0.15 * 0.1);
}

TEST(RankParams, Validation) {
  RankParams p;
  EXPECT_NO_THROW(p.validate());
  p.alpha = 0.5;
  EXPECT_THROW(p.validate(), Error);
  p = RankParams{};
  p.beta = -0.1;
  EXPECT_THROW(p.validate(), Error);
  p = RankParams{};
  p.epsilon = 0.0;
  EXPECT_THROW(p.validate(), Error);
  p = RankParams{};
  p.max_iters = 0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(RunToConvergence, MatchesDensePageRank) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 15;
    std::vector<std::pair<std::size_t, std::size_t>> wanted;
    std::uniform_int_distribution<std::size_t> node(0, n - 1);
    for (int e = 0; e < 35; ++e) wanted.emplace_back(node(rng), node(rng));
    const Corpus c = ingest(graph_jsonl(n, wanted));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Citation& e : c.edges()) edges.emplace_back(e.citing.index(), e.cited.index());
    const CreditTable credit = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
    const RankResult r = run_to_convergence(c, RankGraph::unit(c), credit, wpr_only(0.85));
    ASSERT_TRUE(r.state.converged);
    const auto oracle = testing::dense_pagerank(n, edges, 0.85);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(r.state.scores[i], oracle[i], 1e-9) << trial << ' ' << i;
  }
}

TEST(RunToConvergence, ScoresArePositiveAndDeterministic) {
  const Corpus c = testing::random_corpus(21, {.papers = 60});
  const Indices idx = build_indices(c);
  const CreditTable credit = build_credit_table(c, idx, CreditScheme::kCollective);
  ClassifierOptions opts;
  opts.decay.current_year = c.max_year();
  const Classification cl = classify_corpus(c, idx, opts);
  const RankGraph g = RankGraph::from_edges(c, cl.edges);
  const RankResult a = run_to_convergence(c, g, credit, RankParams{});
  const RankResult b = run_to_convergence(c, g, credit, RankParams{}, {}, 4);
  EXPECT_TRUE(a.state.converged);
  EXPECT_EQ(a.state.scores, b.state.scores);
  EXPECT_EQ(a.order, b.order);
  const double floor = 0.15 / static_cast<double>(c.paper_count());
  for (const double s : a.state.scores) EXPECT_GE(s, floor * (1.0 - 1e-12));
  ASSERT_EQ(a.state.delta_trace.size(), static_cast<std::size_t>(a.state.iterations));
  EXPECT_LT(a.state.last_delta, RankParams{}.epsilon);
}

TEST(RunToConvergence, ReportsNonConvergence) {
  const Corpus c = testing::random_corpus(3, {.papers = 40});
  const CreditTable credit = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  RankParams p;
  p.max_iters = 1;
  const RankResult r = run_to_convergence(c, RankGraph::unit(c), credit, p);
  EXPECT_FALSE(r.state.converged);
  EXPECT_EQ(r.state.iterations, 1);
}

TEST(RunToConvergence, LoweringAnEdgeWeightLowersItsTarget) {
  const Corpus c = testing::random_corpus(8, {.papers = 40, .dangling = 0.0});
  const CreditTable credit = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  const RankResult base = run_to_convergence(c, RankGraph::unit(c), credit, wpr_only(0.85));
  std::size_t checked = 0;
  for (const Citation& e : c.edges()) {
    if (checked == 10) break;
    RankGraph g = RankGraph::unit(c);
    g.set_weight(e.citing, e.cited, 0.1);
    const RankResult lowered = run_to_convergence(c, g, credit, wpr_only(0.85));
    EXPECT_LT(lowered.state.scores[e.cited.index()], base.state.scores[e.cited.index()]);
    ++checked;
  }
  EXPECT_EQ(checked, 10u);
}

TEST(Baselines, HeavyNegativeEdgeDemotesTarget) {
  // t is cited by two self-citations of its author and by one outsider.
  const Corpus c = ingest(R"({"id":"t","year":2000,"journal":"J","authors":[{"name":"Ann Lee"}]}
{"id":"s1","year":2001,"journal":"J","authors":[{"name":"Ann Lee"}],"references":["t"]}
{"id":"s2","year":2002,"journal":"J","authors":[{"name":"Ann Lee"}],"references":["t"]}
{"id":"o1","year":2001,"journal":"J","authors":[{"name":"Bo Kim"}],"references":["u"]}
{"id":"u","year":2000,"journal":"J","authors":[{"name":"Cy Ng"}]}
{"id":"o2","year":2002,"journal":"J","authors":[{"name":"Di Fox"}],"references":["u"]}
)");
  const Indices idx = build_indices(c);
  ClassifierOptions opts;
  opts.decay.current_year = 2010;
  const Classification cl = classify_corpus(c, idx, opts);
  const CreditTable uniform = build_credit_table(c, idx, CreditScheme::kUniform);
  const RankResult pandora = run_to_convergence(c, RankGraph::from_edges(c, cl.edges), uniform, RankParams{});
  const RankResult cajt = cajtrank_baseline(c, uniform, RankParams{});
  const PaperId t = *c.find("t");
  const PaperId u = *c.find("u");
  EXPECT_LT(pandora.state.scores[t.index()], cajt.state.scores[t.index()]);
  EXPECT_LT(pandora.state.scores[t.index()], pandora.state.scores[u.index()]);
}

TEST(Baselines, PandoraWithUnitWeightsAndUniformCreditIsCajtRank) {
  const Corpus c = testing::random_corpus(12, {.papers = 50});
  const CreditTable uniform = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  const RankResult a = run_to_convergence(c, RankGraph::unit(c), uniform, RankParams{});
  const RankResult b = cajtrank_baseline(c, uniform, RankParams{});
  EXPECT_EQ(a.state.scores, b.state.scores);
  EXPECT_EQ(b.algorithm, Algorithm::kCajtRank);
}

TEST(Baselines, FutureRankOnOneYearIsCajtRankWithoutJournals) {
  const Corpus c = ingest(graph_jsonl(12, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {4, 5}, {5, 6}, {7, 6}, {8, 0}, {9, 3}}));
  const CreditTable uniform = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  DecayParams decay;
  decay.current_year = 2010;
  RankParams p;
  const RankResult future = futurerank_baseline(c, uniform, p, decay);
  p.gamma = 0.0;
  const RankResult plain = cajtrank_baseline(c, uniform, p);
  EXPECT_EQ(future.algorithm, Algorithm::kFutureRank);
  EXPECT_EQ(future.params.gamma, 0.0);
  for (std::size_t i = 0; i < c.paper_count(); ++i) {
    EXPECT_NEAR(future.state.scores[i], plain.state.scores[i], 1e-15);
  }
}

TEST(Baselines, AgeDecayFavoursRecentPapers) {
  const Corpus c = ingest(R"({"id":"old","year":2000,"authors":[{"name":"Ann Lee"}]}
{"id":"new","year":2009,"authors":[{"name":"Bo Kim"}]}
)");
  DecayParams decay;
  decay.current_year = 2010;
  const auto p = age_decay_distribution(c, decay);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
  EXPECT_NEAR(p[0] / p[1], std::exp(-0.62 * 9.0), 1e-15);
}

TEST(RankedOrder, TiesBreakByYearThenId) {
  const Corpus c = ingest(R"({"id":"b","year":2001,"authors":[{"name":"Ann Lee"}]}
{"id":"a","year":2001,"authors":[{"name":"Ann Lee"}]}
{"id":"z","year":1999,"authors":[{"name":"Ann Lee"}]}
{"id":"top","year":2005,"authors":[{"name":"Ann Lee"}]}
)");
  const std::vector<double> s = {0.2, 0.2, 0.2, 0.4};
  const auto order = ranked_order(c, s);
  std::vector<std::string> ids;
  for (const PaperId p : order) ids.push_back(c.paper(p).id);
  EXPECT_EQ(ids, (std::vector<std::string>{"top", "z", "a", "b"}));
}

TEST(AlgorithmNames, RoundTrip) {
  for (const Algorithm a : kAllAlgorithms) EXPECT_EQ(algorithm_from_string(to_string(a)), a);
  EXPECT_FALSE(algorithm_from_string("hits").has_value());
}

TEST(RankingCsv, Header) {
  const Corpus c = ingest(graph_jsonl(2, {{0, 1}}));
  const CreditTable uniform = build_credit_table(c, build_indices(c), CreditScheme::kUniform);
  std::ostringstream out;
  write_ranking_csv(out, c, cajtrank_baseline(c, uniform, RankParams{}));
  EXPECT_EQ(out.str().rfind("rank,paper_id,score,wpr,author,journal,reference\n1,n101,", 0), 0u);
}

}  // namespace
}  // namespace coirank
