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

#include "session.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "export.hpp"

namespace coirank {
namespace {

constexpr std::string_view kVersion = "0.1.0";

Corpus ingest_text(const std::string& data, const RunConfig& config) {
  Corpus::IngestOptions options;
  if (!config.alias_file.empty()) options.aliases = AliasTable::from_file(config.alias_file);
  options.max_year = config.max_year;
  std::istringstream in(data);
  return Corpus::ingest(in, options);
}

std::size_t algo_slot(Algorithm algo) { return static_cast<std::size_t>(algo); }

}  // namespace

std::string artifact_file_name(Artifact artifact, Algorithm algo) {
  switch (artifact) {
    case Artifact::kIngestReport: return "ingest_report.json";
    case Artifact::kIndicesCsv: return "indices.csv";
    case Artifact::kEdgesCsv: return "edges.csv";
    case Artifact::kCoiSummary: return "coi_summary.json";
    case Artifact::kCreditCsv: return "credit.csv";
    case Artifact::kRankingCsv: return fmt::format("ranking_{}.csv", to_string(algo));
    case Artifact::kInstitutionsCsv: return "institutions.csv";
    case Artifact::kCountriesCsv: return "countries.csv";
    case Artifact::kYearlyCoicCsv: return "yearly_coic.csv";
    case Artifact::kYearlyImpactCsv: return "yearly_impact.csv";
    case Artifact::kAggregateSummary: return "aggregate_summary.json";
    case Artifact::kEvalCsv: return "eval.csv";
    case Artifact::kManifest: return "manifest.json";
  }
  return "artifact";
}

Session::Session(RunConfig config, std::string data, std::string source)
    : config_(std::move(config)), source_(std::move(source)) {
  config_.validate();
  checksum_ = sha256_hex(data);
  corpus_ = ingest_text(data, config_);
  if (corpus_.paper_count() == 0) {
    throw Error(ErrorCode::kEmptyCorpus,
                fmt::format("no record was admitted from {} ({} rejected)", source_, corpus_.errors().size()));
  }
  threads_ = resolve_threads(config_.threads);
  classifier_options_.decay.rho = config_.rho;
  classifier_options_.decay.current_year = config_.eval_year != 0 ? config_.eval_year : corpus_.max_year();
  classifier_options_.coi_window = config_.coi_window;
  classifier_options_.decay.validate(corpus_.max_year());

  for (const RecordError& e : corpus_.errors()) add_warning(fmt::format("line {}: {}", e.line, e.message));
  for (const std::string& w : corpus_.warnings()) add_warning(w);
  if (!corpus_.dangling().empty()) {
    add_warning(fmt::format("{} reference(s) point outside the corpus", corpus_.dangling().size()));
  }
  if (!corpus_.temporal_anomalies().empty()) {
    add_warning(fmt::format("{} citation(s) point more than a year into the future",
                            corpus_.temporal_anomalies().size()));
  }
}

Session Session::open_file(RunConfig config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open corpus '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, fmt::format("failed reading corpus '{}'", path));
  return Session(std::move(config), buffer.str(), path);
}

void Session::add_warning(std::string message) { warnings_.push_back(std::move(message)); }

const Indices& Session::indices() {
  if (!indices_) indices_ = build_indices(corpus_);
  return *indices_;
}

const Classification& Session::classification() {
  if (!classification_) {
    classification_ = classify_corpus(corpus_, indices(), classifier_options_, threads_);
    if (classification_->summary.floor_hits > 0) {
      add_warning(fmt::format("{} edge weight(s) clamped to the {:g} floor", classification_->summary.floor_hits,
                              kMinEdgeWeight));
    }
  }
  return *classification_;
}

const CreditTable& Session::credit() {
  if (!credit_) credit_ = build_credit_table(corpus_, indices(), config_.credit_scheme, threads_);
  return *credit_;
}

const CreditTable& Session::uniform_credit() {
  if (!uniform_credit_) uniform_credit_ = build_credit_table(corpus_, indices(), CreditScheme::kUniform, threads_);
  return *uniform_credit_;
}

const GroundTruth& Session::ground_truth() {
  if (!ground_truth_) ground_truth_ = build_ground_truth(corpus_, classification().edges);
  return *ground_truth_;
}

RankParams Session::params_for(Algorithm algo) {
  if (!config_.grid_search) return config_.rank;
  auto& tuned = tuning_[algo_slot(algo)];
  if (!tuned) {
    std::vector<std::string> notes;
    const std::vector<std::size_t> ks = k_values(config_.eval, corpus_.paper_count(), &notes);
    if (ks.empty()) {
      add_warning(fmt::format("grid search for {} skipped: no k value fits the corpus", to_string(algo)));
      tuned = TuningResult{config_.rank, 0.0, 0};
    } else {
      const RankGraph graph = RankGraph::from_edges(corpus_, classification().edges);
      Ranker ranker = [&](const RankParams& p) -> std::vector<PaperId> {
        switch (algo) {
          case Algorithm::kPandora:
            return run_to_convergence(corpus_, graph, credit(), p, {}, threads_).order;
          case Algorithm::kCajtRank:
            return cajtrank_baseline(corpus_, uniform_credit(), p, threads_).order;
          case Algorithm::kFutureRank:
            return futurerank_baseline(corpus_, uniform_credit(), p, decay(), threads_).order;
        }
        return {};
      };
      tuned = grid_search(ranker, ground_truth(), config_.rank, ks, algo == Algorithm::kFutureRank,
                          config_.grid_step);
    }
  }
  return tuned->params;
}

const RankResult& Session::rank(Algorithm algo) {
  auto& slot = ranks_[algo_slot(algo)];
  if (!slot) {
    const RankParams params = params_for(algo);
    switch (algo) {
      case Algorithm::kPandora: {
        const RankGraph graph = RankGraph::from_edges(corpus_, classification().edges);
        slot = run_to_convergence(corpus_, graph, credit(), params, {}, threads_);
        break;
      }
      case Algorithm::kCajtRank:
        slot = cajtrank_baseline(corpus_, uniform_credit(), params, threads_);
        break;
      case Algorithm::kFutureRank:
        slot = futurerank_baseline(corpus_, uniform_credit(), params, decay(), threads_);
        break;
    }
    if (!slot->state.converged) {
      add_warning(fmt::format("{} did not converge within {} iterations (last max delta {:g})", to_string(algo),
                              params.max_iters, slot->state.last_delta));
    }
  }
  return *slot;
}

const ImpactReport& Session::aggregate() {
  if (!impact_) {
    const RankResult& r = rank(Algorithm::kPandora);
    impact_ = aggregate_impact(corpus_, indices(), credit(), r.state.scores, classification().edges, config_.coic);
  }
  return *impact_;
}

const EvalTable& Session::evaluate() {
  if (!eval_) {
    std::vector<const RankResult*> results;
    for (const Algorithm a : config_.algorithms) results.push_back(&rank(a));
    eval_ = compare_algorithms(corpus_, ground_truth(), results, config_.eval, threads_);
    for (const std::string& w : eval_->warnings) add_warning(w);
  }
  return *eval_;
}

void Session::write(Artifact artifact, std::ostream& out, Algorithm algo) {
  switch (artifact) {
    case Artifact::kIngestReport:
      out << ingest_report_json(corpus_, checksum_).dump(2) << '\n';
      break;
    case Artifact::kIndicesCsv:
      write_indices_csv(out, corpus_, indices());
      break;
    case Artifact::kEdgesCsv:
      write_edges_csv(out, corpus_, classification());
      break;
    case Artifact::kCoiSummary:
      out << coi_summary_json(classification(), classifier_options_).dump(2) << '\n';
      break;
    case Artifact::kCreditCsv:
      write_credit_csv(out, corpus_, credit());
      break;
    case Artifact::kRankingCsv:
      write_ranking_csv(out, corpus_, rank(algo));
      break;
    case Artifact::kInstitutionsCsv:
      write_institutions_csv(out, corpus_, aggregate());
      break;
    case Artifact::kCountriesCsv:
      write_countries_csv(out, corpus_, aggregate());
      break;
    case Artifact::kYearlyCoicCsv:
      write_yearly_coic_csv(out, corpus_, aggregate());
      break;
    case Artifact::kYearlyImpactCsv:
      write_yearly_impact_csv(out, corpus_, aggregate());
      break;
    case Artifact::kAggregateSummary:
      out << aggregate_summary_json(corpus_, aggregate(), config_.coic).dump(2) << '\n';
      break;
    case Artifact::kEvalCsv:
      write_eval_csv(out, evaluate());
      break;
    case Artifact::kManifest: {
      nlohmann::ordered_json m;
      m["tool"] = "coirank";
      m["version"] = kVersion;
      m["created_at"] = utc_timestamp();
      m["input"] = source_;
      m["corpus_sha256"] = checksum_;
      m["parameters"] = config_.to_json();
      m["effective"] = {{"current_year", decay().current_year}, {"threads", threads_}};
      m["counts"] = {{"papers", corpus_.paper_count()},
                     {"authors", corpus_.author_count()},
                     {"institutions", corpus_.institution_count()},
                     {"countries", corpus_.country_count()},
                     {"journals", corpus_.journal_count()},
                     {"edges", corpus_.edges().size()},
                     {"dangling_references", corpus_.dangling().size()},
                     {"record_errors", corpus_.errors().size()}};
      nlohmann::ordered_json rankings = nlohmann::ordered_json::object();
      for (const Algorithm a : kAllAlgorithms) {
        const auto& r = ranks_[algo_slot(a)];
        if (!r) continue;
        nlohmann::ordered_json entry;
        entry["converged"] = r->state.converged;
        entry["iterations"] = r->state.iterations;
        entry["last_delta"] = r->state.last_delta;
        entry["params"] = {{"alpha", r->params.alpha},
                           {"beta", r->params.beta},
                           {"gamma", r->params.gamma},
                           {"delta", r->params.delta}};
        if (const auto& t = tuning_[algo_slot(a)]) {
          entry["tuning"] = {{"objective", t->objective}, {"evaluated", t->evaluated}};
        }
        rankings[std::string(to_string(a))] = std::move(entry);
      }
      m["rankings"] = std::move(rankings);
      m["artifacts"] = artifacts_;
      m["warnings"] = warnings_;
      out << m.dump(2) << '\n';
      break;
    }
  }
}

void Session::write_file(Artifact artifact, const std::string& path, Algorithm algo) {
  std::ostringstream buffer;
  write(artifact, buffer, algo);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot write '{}'", path));
  out << buffer.str();
  out.close();
  if (!out) throw Error(ErrorCode::kIo, fmt::format("failed writing '{}'", path));
  artifacts_.push_back(std::filesystem::path(path).filename().string());
}

}  // namespace coirank
