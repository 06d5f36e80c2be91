// Copyright 2026 The Proofsmith Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "proofsmith/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <thread>

#include "proofsmith/augment.hpp"
#include "proofsmith/error.hpp"
#include "proofsmith/kb.hpp"
#include "proofsmith/metrics.hpp"
#include "proofsmith/mock_oracle.hpp"
#include "proofsmith/proof.hpp"
#include "proofsmith/remote_oracle.hpp"
#include "proofsmith/search.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // Shared.
  std::string oracle = "mock";
  std::string oracle_url;
  std::string lexicon;
  std::string tagger = "auto";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string config_path;
  std::string manifest_path;
  // Search overrides; unset means "config file or default".
  std::optional<int> n, max_depth, top_proofs, fact_top_k, beam;
  std::optional<double> close_threshold;
  bool no_fallback = false;
  // Inputs and outputs.
  std::string pairs, proofs, out, report, report_json, kb_cache, examples, base, dataset;
  std::vector<std::string> kb, metrics, names;
  std::string method = "level";
  std::string mode = "plain";
  std::string name = "proofs";
  double ratio = 0.5;
  std::vector<std::string> modes{"entail", "contradict", "neutral", "monotonic"};
  int per_premise = 1;
  double base_fraction = 1.0;
  double augment_fraction = 0.0;
  bool proportional = false;
};

// Inputs, outputs and timing of one run.
class Manifest {
 public:
  explicit Manifest(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["inputs"] = json::object();
    j_["outputs"] = json::array();
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    j_["started_utc"] = buf;
  }

  void input(const std::string& path) { j_["inputs"][path] = file_digest(path); }
  void output(const std::string& path) { j_["outputs"].push_back(path); }
  json& operator[](const char* key) { return j_[key]; }

  void write(const std::string& path) {
    j_["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
    write_file(path, j_.dump(2) + "\n");
  }

 private:
  json j_;
  std::chrono::steady_clock::time_point start_;
};

// The oracle and tagger selected by the shared flags.
class Backend {
 public:
  explicit Backend(const Options& o) {
    if (o.oracle == "mock") {
      mock_ = std::make_unique<MockOracle>(o.lexicon.empty() ? MockLexicon::builtin()
                                                             : MockLexicon::load(o.lexicon));
      oracle_ = mock_.get();
    } else {
      std::string url;
      try {
        url = resolve_oracle_url(o.oracle_url.empty() ? std::nullopt
                                                      : std::optional(o.oracle_url));
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      remote_ = std::make_unique<RemoteOracle>(RemoteOptions{url});
      oracle_ = remote_.get();
    }
    const std::string kind =
        o.tagger == "auto" ? (mock_ ? "mock" : "heuristic") : o.tagger;
    if (kind == "mock") {
      if (!mock_) throw UsageError("--tagger mock needs --oracle mock");
      tagger_ = &mock_->tagger();
    } else if (kind == "heuristic") {
      owned_tagger_ = std::make_unique<HeuristicTagger>();
      tagger_ = owned_tagger_.get();
    } else {
      owned_tagger_ = std::make_unique<OracleTagger>(*oracle_);
      tagger_ = owned_tagger_.get();
    }
  }

  const Oracle& oracle() const { return *oracle_; }
  const Tagger& tagger() const { return *tagger_; }
  const MockLexicon& lexicon() const {
    return mock_ ? mock_->lexicon() : MockLexicon::builtin();
  }

  json describe() const {
    return json{{"oracle", oracle_->id()}, {"tagger", tagger_->id()}};
  }

 private:
  std::unique_ptr<MockOracle> mock_;
  std::unique_ptr<RemoteOracle> remote_;
  std::unique_ptr<Tagger> owned_tagger_;
  const Oracle* oracle_ = nullptr;
  const Tagger* tagger_ = nullptr;
};

// Runs f(i) for i in [0, n) on up to `jobs` threads. The exception of the
// lowest failing index is rethrown, so errors do not depend on scheduling.
template <typename F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  auto run = [&](std::size_t t, std::size_t stride) {
    for (std::size_t i = t; i < n; i += stride) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t, workers);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Config file, then explicit flags.
SearchConfig effective_config(Options& o, Manifest& manifest) {
  SearchConfig cfg;
  if (!o.config_path.empty()) {
    json j;
    try {
      j = json::parse(read_file(o.config_path));
    } catch (const json::exception& e) {
      throw UsageError("config " + o.config_path + ": " + e.what());
    }
    if (!j.is_object()) throw UsageError("config " + o.config_path + ": expected an object");
    manifest.input(o.config_path);
    // Driver keys; flags given on the command line win.
    if (j.contains("seed")) {
      if (o.seed == 0) o.seed = j["seed"].get<std::uint64_t>();
      j.erase("seed");
    }
    if (j.contains("jobs")) {
      if (o.jobs == 1) o.jobs = j["jobs"].get<int>();
      j.erase("jobs");
    }
    if (j.contains("mode")) {
      if (o.mode == "plain") o.mode = j["mode"].get<std::string>();
      j.erase("mode");
    }
    try {
      cfg.apply_json(j);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  if (o.n) cfg.n = *o.n;
  if (o.max_depth) cfg.max_depth = *o.max_depth;
  if (o.top_proofs) cfg.top_proofs = *o.top_proofs;
  if (o.fact_top_k) cfg.fact_top_k = *o.fact_top_k;
  if (o.beam) cfg.beam = *o.beam;
  if (o.close_threshold) cfg.close_threshold = *o.close_threshold;
  if (o.no_fallback) cfg.fallback_to_beam = false;
  try {
    cfg.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  return cfg;
}

std::string manifest_path(const Options& o, const std::string& primary) {
  return o.manifest_path.empty() ? primary + ".manifest.json" : o.manifest_path;
}

void finish(Manifest& m, const Options& o, const Backend* backend, const std::string& primary) {
  m["seed"] = o.seed;
  m["jobs"] = o.jobs;
  if (backend) m["backend"] = backend->describe();
  m.write(manifest_path(o, primary));
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_prove(Options& o, std::ostream& out) {
  Manifest m("prove");
  SearchConfig cfg = effective_config(o, m);
  Backend backend(o);
  static const std::map<std::string, SearchMethod> kMethods = {
      {"level", SearchMethod::kLevel},
      {"beam", SearchMethod::kBeam},
      {"facts", SearchMethod::kFacts},
      {"none", SearchMethod::kNone}};
  const SearchMethod method = kMethods.at(o.method);
  if (method == SearchMethod::kFacts && o.kb.empty()) throw UsageError("--method facts needs --kb");

  m.input(o.pairs);
  const auto pairs = read_pairs(o.pairs);
  std::optional<KBIndex> index;
  if (method == SearchMethod::kFacts) {
    for (const auto& f : o.kb) m.input(f);
    index = KBIndex::build(o.kb, backend.oracle(),
                           o.kb_cache.empty() ? std::nullopt : std::optional(o.kb_cache));
    m["kb"] = {{"facts", index->size()}, {"from_cache", index->loaded_from_cache()}};
  }

  std::vector<std::vector<Proof>> results(pairs.size());
  parallel_for(pairs.size(), o.jobs, [&](std::size_t i) {
    const auto& pr = pairs[i];
    switch (method) {
      case SearchMethod::kLevel:
        results[i] = level_search(pr.premise, pr.hypothesis, cfg, backend.oracle());
        break;
      case SearchMethod::kBeam:
        results[i] = beam_search(pr.premise, pr.hypothesis, cfg, backend.oracle());
        break;
      case SearchMethod::kNone:
        results[i] = undirected_search(pr.premise, pr.hypothesis, cfg, backend.oracle());
        break;
      default:
        results[i] = {fact_proof_search(pr.premise, pr.hypothesis, *index, cfg,
                                        backend.oracle(), backend.tagger())};
    }
    for (std::size_t k = 0; k < results[i].size(); ++k) {
      Proof& p = results[i][k];
      p.id = k == 0 ? pr.id : pr.id + "#" + std::to_string(k + 1);
      p.label = pr.label;
      p.config = cfg.to_json();
      p.meta["pair_id"] = pr.id;
      p.meta["rank"] = k + 1;
      validate(p);
    }
  });

  std::vector<Proof> all;
  std::size_t warned = 0;
  for (auto& r : results) {
    for (auto& p : r) {
      warned += !p.warnings.empty();
      all.push_back(std::move(p));
    }
  }
  write_proofs(o.out, all);
  m.output(o.out);
  m["method"] = o.method;
  m["config"] = cfg.to_json();
  m["counts"] = {{"pairs", pairs.size()}, {"proofs", all.size()}, {"with_warnings", warned}};
  finish(m, o, &backend, o.out);
  out << "prove: " << pairs.size() << " pairs -> " << all.size() << " proofs (" << o.method
      << ") in " << o.out << "\n";
  return kExitOk;
}

int cmd_retrieve(Options& o, std::ostream& out) {
  Manifest m("retrieve");
  SearchConfig cfg = effective_config(o, m);
  Backend backend(o);
  m.input(o.pairs);
  for (const auto& f : o.kb) m.input(f);
  const auto pairs = read_pairs(o.pairs);
  const auto index = KBIndex::build(o.kb, backend.oracle(),
                                    o.kb_cache.empty() ? std::nullopt : std::optional(o.kb_cache));
  std::vector<std::string> lines(pairs.size());
  parallel_for(pairs.size(), o.jobs, [&](std::size_t i) {
    const auto r = retrieve_for_pair(index, pairs[i].premise, pairs[i].hypothesis, cfg.fact_top_k,
                                     backend.oracle(), backend.tagger(), cfg.cluster_threshold);
    json facts = json::array();
    for (const auto& f : r.facts) {
      facts.push_back({{"kb_id", f.kb_id},
                       {"text", f.text},
                       {"source", std::string(to_string(f.source))},
                       {"score", f.score},
                       {"rank", f.rank}});
    }
    lines[i] = json{{"pair_id", pairs[i].id},
                    {"premise_keywords", r.premise_keywords},
                    {"hypothesis_keywords", r.hypothesis_keywords},
                    {"groups", r.groups},
                    {"queries", r.queries},
                    {"used_fallback", r.used_fallback},
                    {"facts", facts}}
                   .dump();
  });
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  write_file(o.out, text);
  m.output(o.out);
  m["config"] = cfg.to_json();
  m["counts"] = {{"pairs", pairs.size()}, {"kb_facts", index.size()}};
  finish(m, o, &backend, o.out);
  out << "retrieve: " << pairs.size() << " pairs, top-" << cfg.fact_top_k << " of "
      << index.size() << " facts -> " << o.out << "\n";
  return kExitOk;
}

std::string write_report(const Options& o, const std::vector<AggregateReport>& rows,
                         Manifest& m, std::ostream& out) {
  const std::string table = format_report(rows);
  out << table;
  if (!o.report.empty()) {
    write_file(o.report, table);
    m.output(o.report);
  }
  if (!o.report_json.empty()) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(r.to_json());
    write_file(o.report_json, j.dump(2) + "\n");
    m.output(o.report_json);
  }
  return table;
}

int cmd_score(Options& o, std::ostream& out) {
  Manifest m("score");
  effective_config(o, m);
  Backend backend(o);
  const PairMode mode = parse_pair_mode(o.mode);
  m.input(o.proofs);
  const auto proofs = read_proofs(o.proofs);
  if (proofs.empty()) throw InvalidInput(o.proofs + ": no proofs");
  std::vector<ProofMetrics> metrics(proofs.size());
  parallel_for(proofs.size(), o.jobs, [&](std::size_t i) {
    metrics[i] = score_proof(proofs[i], backend.oracle(), backend.tagger(), mode);
  });
  write_metrics(o.out, metrics);
  m.output(o.out);
  const auto row = aggregate(metrics, o.name);
  write_report(o, {row}, m, out);
  m["mode"] = o.mode;
  m["counts"] = {{"proofs", proofs.size()}, {"judge_errors", row.judge_errors}};
  finish(m, o, &backend, o.out);
  // Judge failures leave holes in the table; the run still reports them.
  return row.judge_errors > 0 ? kExitOracle : kExitOk;
}

int cmd_report(Options& o, std::ostream& out) {
  Manifest m("report");
  if (!o.names.empty() && o.names.size() != o.metrics.size()) {
    throw UsageError("--names must match --metrics one to one");
  }
  std::vector<AggregateReport> rows;
  for (std::size_t i = 0; i < o.metrics.size(); ++i) {
    m.input(o.metrics[i]);
    const std::string name = o.names.empty()
                                 ? std::filesystem::path(o.metrics[i]).stem().string()
                                 : o.names[i];
    rows.push_back(aggregate(read_metrics(o.metrics[i]), name));
  }
  o.report = o.out;
  write_report(o, rows, m, out);
  finish(m, o, nullptr, o.out);
  return kExitOk;
}

int cmd_perturb(Options& o, std::ostream& out) {
  Manifest m("perturb");
  effective_config(o, m);
  Backend backend(o);
  if (!(o.ratio > 0.0 && o.ratio <= 1.0)) throw UsageError("--ratio must be in (0, 1]");
  LexiconSubstituter sub(backend.lexicon());
  m.input(o.proofs);
  auto proofs = read_proofs(o.proofs);
  for (auto& p : proofs) p = perturb_gold(p, o.ratio, sub, o.seed);
  write_proofs(o.out, proofs);
  m.output(o.out);
  m["ratio"] = o.ratio;
  m["substituter"] = sub.id();
  m["counts"] = {{"proofs", proofs.size()}};
  finish(m, o, &backend, o.out);
  out << "perturb: " << proofs.size() << " proofs (ratio " << o.ratio << ", seed " << o.seed
      << ") -> " << o.out << "\n";
  return kExitOk;
}

int cmd_negate(Options& o, std::ostream& out) {
  Manifest m("negate");
  SearchConfig cfg = effective_config(o, m);
  Backend backend(o);
  m.input(o.proofs);
  auto proofs = read_proofs(o.proofs);
  parallel_for(proofs.size(), o.jobs,
               [&](std::size_t i) { proofs[i] = negate_gold(proofs[i], backend.oracle(), cfg.beam); });
  write_proofs(o.out, proofs);
  m.output(o.out);
  m["counts"] = {{"proofs", proofs.size()}};
  finish(m, o, &backend, o.out);
  out << "negate: " << proofs.size() << " proofs -> " << o.out << "\n";
  return kExitOk;
}

int cmd_augment(Options& o, std::ostream& out, std::ostream& err) {
  Manifest m("augment");
  SearchConfig cfg = effective_config(o, m);
  if (o.pairs.empty() == o.examples.empty()) {
    throw UsageError("augment needs exactly one of --pairs or --examples");
  }
  if (o.out.empty() && o.dataset.empty()) throw UsageError("augment needs --out or --dataset");
  if (!o.dataset.empty() && o.base.empty()) throw UsageError("--dataset needs --base");
  std::unique_ptr<Backend> backend;
  std::vector<AugmentExample> examples;
  if (!o.pairs.empty()) {
    backend = std::make_unique<Backend>(o);
    std::vector<GenerationMode> modes;
    for (const auto& name : o.modes) {
      GenerationMode mode;
      try {
        mode = parse_mode(name);
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      if (!is_augment_mode(mode)) throw UsageError("mode " + name + " has no augment label");
      modes.push_back(mode);
    }
    m.input(o.pairs);
    std::vector<SourcePremise> premises;
    for (auto& p : read_pairs(o.pairs)) premises.push_back({p.id, p.premise});
    auto result = generate_augment_set(premises, modes, o.per_premise, backend->oracle(),
                                       o.jobs, cfg.beam);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    m["warnings"] = result.warnings;
    m["modes"] = o.modes;
    m["per_premise"] = o.per_premise;
    examples = std::move(result.examples);
  } else {
    m.input(o.examples);
    examples = read_augment(o.examples);
  }
  if (!o.out.empty()) {
    write_augment(o.out, examples);
    m.output(o.out);
  }
  m["examples"] = examples.size();
  if (!o.dataset.empty()) {
    m.input(o.base);
    ExportOptions opt;
    opt.base_fraction = o.base_fraction;
    opt.augment_fraction = o.augment_fraction;
    opt.seed = o.seed;
    opt.equal_mode_shares = !o.proportional;
    auto exported = export_dataset(read_labeled_pairs(o.base), examples, opt);
    write_labeled_pairs(o.dataset, exported.rows);
    m.output(o.dataset);
    m["export"] = exported.manifest;
    out << "augment: exported " << exported.rows.size() << " pairs ("
        << exported.manifest["base_selected"] << " base + "
        << exported.manifest["augment_selected"] << " augment) -> " << o.dataset << "\n";
  }
  finish(m, o, backend.get(), o.out.empty() ? o.dataset : o.out);
  out << "augment: " << examples.size() << " examples\n";
  return kExitOk;
}

int cmd_kb_build(Options& o, std::ostream& out) {
  Manifest m("kb-build");
  effective_config(o, m);
  Backend backend(o);
  for (const auto& f : o.kb) m.input(f);
  const auto index = KBIndex::build(o.kb, backend.oracle(), o.kb_cache);
  m.output(o.kb_cache);
  m["counts"] = {{"facts", index.size()}, {"dim", index.dim()}};
  m["from_cache"] = index.loaded_from_cache();
  finish(m, o, &backend, o.kb_cache);
  out << "kb-build: " << index.size() << " facts, dim " << index.dim()
      << (index.loaded_from_cache() ? " (cache up to date)" : "") << " -> " << o.kb_cache
      << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Parser

void add_shared(CLI::App& sub, Options& o) {
  sub.add_option("--oracle", o.oracle, "Backend")
      ->check(CLI::IsMember({"mock", "remote"}))
      ->capture_default_str();
  sub.add_option("--oracle-url", o.oracle_url,
                 std::string("Sidecar URL (default $") + kOracleUrlEnv + ")");
  sub.add_option("--lexicon", o.lexicon, "Mock lexicon TSV (default: built in)")
      ->check(CLI::ExistingFile);
  sub.add_option("--tagger", o.tagger, "Keyword tagger")
      ->check(CLI::IsMember({"auto", "mock", "heuristic", "oracle"}))
      ->capture_default_str();
  sub.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sub.add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  sub.add_option("--config", o.config_path, "JSON config; flags override it")
      ->check(CLI::ExistingFile);
  sub.add_option("--manifest", o.manifest_path, "Manifest path");
}

void add_search(CLI::App& sub, Options& o) {
  sub.add_option("--n", o.n, "Candidates kept per level (10)");
  sub.add_option("--max-depth", o.max_depth, "Maximum inferred steps (2)");
  sub.add_option("--top-proofs", o.top_proofs, "Proofs returned per pair (2)");
  sub.add_option("--fact-top-k", o.fact_top_k, "Facts retrieved per pair (8)");
  sub.add_option("--close-threshold", o.close_threshold, "Closing-step threshold (0.80)");
  sub.add_option("--beam", o.beam, "Generation beam width (10)");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"proofsmith: multi-step entailment proof search and verification", "proofsmith"};
  app.require_subcommand(1);

  auto* prove = app.add_subcommand("prove", "Search proofs for premise/hypothesis pairs");
  add_shared(*prove, o);
  add_search(*prove, o);
  prove->add_option("--pairs", o.pairs, "Pairs TSV")->required()->check(CLI::ExistingFile);
  prove->add_option("--out", o.out, "Proof records (JSONL)")->required();
  prove->add_option("--method", o.method, "Search method")
      ->check(CLI::IsMember({"level", "beam", "facts", "none"}))
      ->capture_default_str();
  prove->add_option("--kb", o.kb, "Fact files (facts method)")->check(CLI::ExistingFile);
  prove->add_option("--kb-cache", o.kb_cache, "Embedding cache file");
  prove->add_flag("--no-fallback", o.no_fallback,
                  "Fail instead of falling back when every fact is discarded");

  auto* retrieve = app.add_subcommand("retrieve", "Retrieve facts for each pair");
  add_shared(*retrieve, o);
  add_search(*retrieve, o);
  retrieve->add_option("--pairs", o.pairs, "Pairs TSV")->required()->check(CLI::ExistingFile);
  retrieve->add_option("--kb", o.kb, "Fact files")->required()->check(CLI::ExistingFile);
  retrieve->add_option("--kb-cache", o.kb_cache, "Embedding cache file");
  retrieve->add_option("--out", o.out, "Retrievals (JSONL)")->required();

  auto* score = app.add_subcommand("score", "Score proofs and print the summary table");
  add_shared(*score, o);
  score->add_option("--proofs", o.proofs, "Proof records")->required()->check(CLI::ExistingFile);
  score->add_option("--out", o.out, "Per-proof metrics (JSONL)")->required();
  score->add_option("--mode", o.mode, "Pairing of steps")
      ->check(CLI::IsMember({"plain", "fact_concat"}))
      ->capture_default_str();
  score->add_option("--name", o.name, "Row label")->capture_default_str();
  score->add_option("--report", o.report, "Write the table here too");
  score->add_option("--report-json", o.report_json, "Table as JSON");

  auto* report = app.add_subcommand("report", "Tabulate one or more metrics files");
  report->add_option("--metrics", o.metrics, "Metrics files, one row each")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--names", o.names, "Row labels (default: file stems)");
  report->add_option("--out", o.out, "Table")->required();
  report->add_option("--report-json", o.report_json, "Table as JSON");
  report->add_option("--manifest", o.manifest_path, "Manifest path");

  auto* perturb = app.add_subcommand("perturb", "Perturbed-gold baseline");
  add_shared(*perturb, o);
  perturb->add_option("--proofs", o.proofs, "Proof records")->required()->check(CLI::ExistingFile);
  perturb->add_option("--out", o.out, "Perturbed proofs")->required();
  perturb->add_option("--ratio", o.ratio, "Share of tokens replaced per step")
      ->capture_default_str();

  auto* negate = app.add_subcommand("negate", "Negated-gold baseline");
  add_shared(*negate, o);
  negate->add_option("--proofs", o.proofs, "Proof records")->required()->check(CLI::ExistingFile);
  negate->add_option("--out", o.out, "Negated proofs")->required();
  negate->add_option("--beam", o.beam, "Generation beam width (10)");

  auto* augment = app.add_subcommand("augment", "Generate labeled pairs and export datasets");
  add_shared(*augment, o);
  augment->add_option("--pairs", o.pairs, "Premises (pairs TSV)")->check(CLI::ExistingFile);
  augment->add_option("--examples", o.examples, "Reuse generated examples")
      ->check(CLI::ExistingFile);
  augment->add_option("--modes", o.modes, "Generation modes")->capture_default_str();
  augment->add_option("--per-premise", o.per_premise, "Generations per premise and mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--out", o.out, "Examples (JSONL)");
  augment->add_option("--base", o.base, "Base dataset TSV")->check(CLI::ExistingFile);
  augment->add_option("--dataset", o.dataset, "Exported dataset TSV");
  augment->add_option("--base-fraction", o.base_fraction, "Share of base kept")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  augment->add_option("--augment-fraction", o.augment_fraction,
                      "Augment size as a share of |base|")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  augment->add_flag("--proportional", o.proportional,
                    "Sample the augment pool as a whole instead of equal shares per mode");

  auto* kb_build = app.add_subcommand("kb-build", "Embed a fact corpus into a cache file");
  add_shared(*kb_build, o);
  kb_build->add_option("--kb", o.kb, "Fact files")->required()->check(CLI::ExistingFile);
  kb_build->add_option("--cache", o.kb_cache, "Cache file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (prove->parsed()) return cmd_prove(o, out);
    if (retrieve->parsed()) return cmd_retrieve(o, out);
    if (score->parsed()) return cmd_score(o, out);
    if (report->parsed()) return cmd_report(o, out);
    if (perturb->parsed()) return cmd_perturb(o, out);
    if (negate->parsed()) return cmd_negate(o, out);
    if (augment->parsed()) return cmd_augment(o, out, err);
    if (kb_build->parsed()) return cmd_kb_build(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleUnavailable& e) {
    err << "oracle unavailable: " << e.what() << "\n";
    return kExitOracle;
  } catch (const ProtocolError& e) {
    err << "oracle protocol error: " << e.what() << "\n";
    return kExitOracle;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace proofsmith::cli
