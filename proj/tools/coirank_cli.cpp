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

// Command-line front end over the coirank C API.

#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coirank/coirank.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotConverged = 2;

struct Flag {
  const char* key;
  const char* help;
};

// Run parameters forwarded verbatim to coirank_config_set.
constexpr Flag kValueFlags[] = {
    {"alpha", "weight of the weighted PageRank component"},
    {"beta", "weight of the author component"},
    {"gamma", "weight of the journal component"},
    {"delta", "weight of the reference component"},
    {"epsilon", "convergence threshold on max |dS|"},
    {"max-iters", "iteration cap"},
    {"rho", "decay constant of negative COI edge weights"},
    {"eval-year", "current year used by the decay (default: newest paper)"},
    {"coi-window", "only count relationships from the last W years (0 = all)"},
    {"max-year", "reject records newer than this year (default: this year)"},
    {"credit-scheme", "collective, uniform or first-author"},
    {"coic-attribution", "side credited with a COI citation: cited, citing or both"},
    {"coic-classes", "comma-separated COI classes counted by COIC, or all"},
    {"k-min", "smallest k evaluated"},
    {"k-max", "largest k evaluated"},
    {"k-step", "k increment"},
    {"spearman-domain", "union, intersection or full"},
    {"algo", "comma-separated rankers: pandora, cajtrank, futurerank or all"},
    {"grid-step", "simplex step of the parameter grid search"},
    {"alias-file", "JSON object mapping affiliation variants to canonical names"},
    {"threads", "worker threads (0 = available cores)"},
    {"seed", "fixture generator seed"},
    {"papers", "fixture size"},
    {"rate", "fixture COI injection rate in [0, 1]"},
};

constexpr Flag kBoolFlags[] = {
    {"ri-normalized", "divide list RI by its maximum"},
    {"grid-search", "tune alpha, beta, gamma and delta before ranking"},
    {"dump-indices", "also write indices.csv"},
    {"dump-credit", "also write credit.csv"},
};

const char* const kAlgoNames[] = {"pandora", "cajtrank", "futurerank"};

struct Options {
  std::string input;
  std::string output_dir = ".";
  std::string fixture_out;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> bools;
  std::map<std::string, CLI::Option*> handles;
};

bool report(coirank_status status) {
  if (status == COIRANK_OK) return true;
  std::fprintf(stderr, "coirank: error: %s: %s\n", coirank_status_string(status), coirank_last_error());
  return false;
}

std::string config_value(const coirank_config* config, const char* key) {
  char* raw = nullptr;
  if (coirank_config_get(config, key, &raw) != COIRANK_OK) return {};
  std::string value = raw;
  coirank_string_free(raw);
  return value;
}

class Runner {
 public:
  explicit Runner(const Options& options) : options_(options) {}
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;
  ~Runner() {
    coirank_session_destroy(session_);
    coirank_config_destroy(config_);
  }

  bool configure() {
    if (!report(coirank_config_create(&config_))) return false;
    for (const auto& [key, value] : options_.values) {
      if (options_.handles.at(key)->count() == 0) continue;
      if (!report(coirank_config_set(config_, key.c_str(), value.c_str()))) return false;
    }
    for (const auto& [key, value] : options_.bools) {
      if (options_.handles.at(key)->count() == 0) continue;
      if (!report(coirank_config_set(config_, key.c_str(), value ? "true" : "false"))) return false;
    }
    return report(coirank_config_validate(config_));
  }

  const coirank_config* config() const { return config_; }

  bool open() {
    if (options_.input.empty()) {
      std::fprintf(stderr, "coirank: error: --input is required\n");
      return false;
    }
    std::error_code ec;
    std::filesystem::create_directories(options_.output_dir, ec);
    if (ec) {
      std::fprintf(stderr, "coirank: error: cannot create %s: %s\n", options_.output_dir.c_str(),
                   ec.message().c_str());
      return false;
    }
    const bool ok = report(coirank_session_open_file(config_, options_.input.c_str(), &session_));
    flush_warnings();
    if (!ok) return false;
    std::fprintf(stderr, "coirank: ingested %zu papers, %zu citations (%zu dangling, %zu rejected records)\n",
                 coirank_session_paper_count(session_), coirank_session_edge_count(session_),
                 coirank_session_dangling_count(session_), coirank_session_record_error_count(session_));
    return true;
  }

  bool write(coirank_artifact artifact, const std::string& name, coirank_algorithm algo = COIRANK_ALGO_PANDORA) {
    const std::string path = (std::filesystem::path(options_.output_dir) / name).string();
    const bool ok = report(coirank_session_write(session_, artifact, algo, path.c_str()));
    flush_warnings();
    if (ok) std::fprintf(stderr, "coirank: wrote %s\n", path.c_str());
    return ok;
  }

  bool rank(const std::vector<coirank_algorithm>& algos) {
    for (const coirank_algorithm algo : algos) {
      const coirank_status status = coirank_session_rank(session_, algo);
      flush_warnings();
      if (status == COIRANK_E_NOT_CONVERGED) {
        not_converged_ = true;
      } else if (!report(status)) {
        return false;
      }
      if (!logged_.insert(algo).second) continue;
      int converged = 0;
      int iterations = 0;
      double delta = 0.0;
      coirank_session_rank_info(session_, algo, &converged, &iterations, &delta);
      std::fprintf(stderr, "coirank: %s %s after %d iterations (max |dS| = %.3g)\n", kAlgoNames[algo],
                   converged ? "converged" : "did not converge", iterations, delta);
    }
    return true;
  }

  bool aggregate() {
    const bool ok = report(coirank_session_aggregate(session_));
    flush_warnings();
    return ok;
  }

  bool evaluate() {
    const bool ok = report(coirank_session_evaluate(session_));
    flush_warnings();
    return ok;
  }

  std::vector<coirank_algorithm> selected_algorithms() const {
    const std::string algos = "," + config_value(config_, "algo") + ",";
    std::vector<coirank_algorithm> out;
    for (int a = 0; a < 3; ++a) {
      if (algos.find(std::string(",") + kAlgoNames[a] + ",") != std::string::npos) {
        out.push_back(static_cast<coirank_algorithm>(a));
      }
    }
    return out;
  }

  bool enabled(const char* key) const { return config_value(config_, key) == "true"; }

  int finish(bool ok) {
    if (session_ != nullptr && !write(COIRANK_ARTIFACT_MANIFEST, "manifest.json")) ok = false;
    if (!ok) return kExitInput;
    return not_converged_ ? kExitNotConverged : kExitOk;
  }

 private:
  void flush_warnings() {
    if (session_ == nullptr) return;
    const std::size_t n = coirank_session_warning_count(session_);
    for (; warnings_shown_ < n; ++warnings_shown_) {
      std::fprintf(stderr, "coirank: warning: %s\n", coirank_session_warning(session_, warnings_shown_));
    }
  }

  const Options& options_;
  coirank_config* config_ = nullptr;
  coirank_session* session_ = nullptr;
  std::size_t warnings_shown_ = 0;
  bool not_converged_ = false;
  std::set<coirank_algorithm> logged_;
};

int run_stage(const std::string& stage, const Options& options) {
  Runner runner(options);
  if (!runner.configure() || !runner.open()) return kExitInput;

  const bool all = stage == "pipeline";
  const std::vector<coirank_algorithm> algos = runner.selected_algorithms();
  bool ok = runner.write(COIRANK_ARTIFACT_INGEST_REPORT, "ingest_report.json");
  if (ok && runner.enabled("dump-indices")) ok = runner.write(COIRANK_ARTIFACT_INDICES_CSV, "indices.csv");

  if (ok && (all || stage == "classify")) {
    ok = runner.write(COIRANK_ARTIFACT_EDGES_CSV, "edges.csv") &&
         runner.write(COIRANK_ARTIFACT_COI_SUMMARY, "coi_summary.json");
  }
  if (ok && (all || stage == "rank")) {
    ok = runner.rank(algos);
    for (const coirank_algorithm algo : algos) {
      if (!ok) break;
      ok = runner.write(COIRANK_ARTIFACT_RANKING_CSV, std::string("ranking_") + kAlgoNames[algo] + ".csv", algo);
    }
    if (ok && runner.enabled("dump-credit")) ok = runner.write(COIRANK_ARTIFACT_CREDIT_CSV, "credit.csv");
  }
  if (ok && (all || stage == "aggregate")) {
    ok = runner.rank({COIRANK_ALGO_PANDORA}) && runner.aggregate() &&
         runner.write(COIRANK_ARTIFACT_INSTITUTIONS_CSV, "institutions.csv") &&
         runner.write(COIRANK_ARTIFACT_COUNTRIES_CSV, "countries.csv") &&
         runner.write(COIRANK_ARTIFACT_YEARLY_COIC_CSV, "yearly_coic.csv") &&
         runner.write(COIRANK_ARTIFACT_YEARLY_IMPACT_CSV, "yearly_impact.csv") &&
         runner.write(COIRANK_ARTIFACT_AGGREGATE_SUMMARY, "aggregate_summary.json");
  }
  if (ok && (all || stage == "eval")) {
    ok = runner.rank(algos) && runner.evaluate() && runner.write(COIRANK_ARTIFACT_EVAL_CSV, "eval.csv");
  }
  return runner.finish(ok);
}

int run_fixture(const Options& options) {
  Runner runner(options);
  if (!runner.configure()) return kExitInput;
  const std::string seed = config_value(runner.config(), "seed");
  const std::string papers = config_value(runner.config(), "papers");
  const std::string rate = config_value(runner.config(), "rate");
  const coirank_status status = coirank_fixture_generate(std::stoull(seed), std::stoull(papers), std::stod(rate),
                                                         options.fixture_out.c_str());
  if (!report(status)) return kExitInput;
  std::fprintf(stderr, "coirank: wrote %s (%s papers, seed %s, rate %s)\n", options.fixture_out.c_str(),
               papers.c_str(), seed.c_str(), rate.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conflict-of-interest aware citation ranking"};
  app.set_version_flag("--version", std::string(coirank_version()));
  app.set_config("--config", "", "flat key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  Options options;
  app.add_option("-i,--input", options.input, "JSON-Lines corpus");
  app.add_option("-o,--output-dir", options.output_dir, "directory for artifacts")->capture_default_str();
  for (const Flag& f : kValueFlags) {
    options.handles[f.key] = app.add_option(std::string("--") + f.key, options.values[f.key], f.help);
  }
  for (const Flag& f : kBoolFlags) {
    options.handles[f.key] = app.add_flag(std::string("--") + f.key, options.bools[f.key], f.help);
  }

  const std::pair<const char*, const char*> stages[] = {
      {"ingest", "validate and summarize a corpus"},
      {"classify", "label every citation with its COI class and weight"},
      {"rank", "rank papers with the selected algorithms"},
      {"aggregate", "roll paper scores up to scholars, institutions and countries"},
      {"eval", "compare rankers against the COI-free ground truth"},
      {"pipeline", "run every stage and write every artifact"},
  };
  for (const auto& [name, help] : stages) app.add_subcommand(name, help)->fallthrough();
  CLI::App* fixture = app.add_subcommand("fixture", "write a synthetic JSON-Lines corpus")->fallthrough();
  fixture->add_option("--out", options.fixture_out, "destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen == fixture) return run_fixture(options);
  return run_stage(chosen->get_name(), options);
}
