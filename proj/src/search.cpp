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


#include "proofsmith/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "proofsmith/error.hpp"

namespace proofsmith {

using nlohmann::json;

// ---------------------------------------------------------------------------
// SearchConfig

void SearchConfig::validate() const {
  if (n < 1) throw InvalidInput("config: n must be >= 1");
  if (max_depth < 1) throw InvalidInput("config: max_depth must be >= 1");
  if (top_proofs < 1) throw InvalidInput("config: top_proofs must be >= 1");
  if (gen_modes.empty()) throw InvalidInput("config: gen_modes is empty");
  for (auto m : gen_modes) {
    if (m != GenerationMode::kEntail && m != GenerationMode::kMonotonic) {
      throw InvalidInput("config: gen_modes may only hold entail and monotonic");
    }
  }
  if (fact_top_k < 1) throw InvalidInput("config: fact_top_k must be >= 1");
  if (!(close_threshold > 0.0 && close_threshold <= 1.0)) {
    throw InvalidInput("config: close_threshold must be in (0, 1]");
  }
  if (beam < 1) throw InvalidInput("config: beam must be >= 1");
  if (!(cluster_threshold >= -1.0 && cluster_threshold <= 1.0)) {
    throw InvalidInput("config: cluster_threshold must be in [-1, 1]");
  }
}

json SearchConfig::to_json() const {
  std::vector<std::string> modes;
  for (auto m : gen_modes) modes.emplace_back(mode_name(m));
  return json{{"n", n},
              {"max_depth", max_depth},
              {"top_proofs", top_proofs},
              {"gen_modes", modes},
              {"fact_top_k", fact_top_k},
              {"close_threshold", close_threshold},
              {"beam", beam},
              {"cluster_threshold", cluster_threshold},
              {"fallback_to_beam", fallback_to_beam}};
}

void SearchConfig::apply_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("config: expected an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") n = value.get<int>();
      else if (key == "max_depth") max_depth = value.get<int>();
      else if (key == "top_proofs") top_proofs = value.get<int>();
      else if (key == "fact_top_k") fact_top_k = value.get<int>();
      else if (key == "close_threshold") close_threshold = value.get<double>();
      else if (key == "beam") beam = value.get<int>();
      else if (key == "cluster_threshold") cluster_threshold = value.get<double>();
      else if (key == "fallback_to_beam") fallback_to_beam = value.get<bool>();
      else if (key == "gen_modes") {
        gen_modes.clear();
        for (const auto& m : value) gen_modes.push_back(parse_mode(m.get<std::string>()));
      } else {
        throw InvalidInput("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Candidates

std::vector<const ScoredCandidate*> ScoredCandidate::chain() const {
  std::vector<const ScoredCandidate*> out;
  for (const ScoredCandidate* c = this; c != nullptr; c = c->parent.get()) out.push_back(c);
  std::reverse(out.begin(), out.end());
  return out;
}

Target::Target(const Oracle& oracle, Sentence hypothesis)
    : hypothesis_(std::move(hypothesis)), embedding_(embed(oracle, hypothesis_)) {}

double Target::sim(const Embedding& v) const { return cosine(v, embedding_); }

CandidatePtr make_root(const Oracle& oracle, const Sentence& premise, const Target& target) {
  return std::make_shared<const ScoredCandidate>(
      ScoredCandidate{premise, target.sim(embed(oracle, premise)), std::nullopt, nullptr, 0});
}

namespace {

CandidatePtr child(Sentence s, double sim, GenerationMode mode, CandidatePtr parent) {
  const int depth = parent->depth + 1;
  return std::make_shared<const ScoredCandidate>(
      ScoredCandidate{std::move(s), sim, mode, std::move(parent), depth});
}

bool ranks_before(const CandidatePtr& a, const CandidatePtr& b) {
  if (a->sim_to_hypothesis != b->sim_to_hypothesis) {
    return a->sim_to_hypothesis > b->sim_to_hypothesis;
  }
  return a->sentence.key() < b->sentence.key();
}

// Level-synchronized expand/filter from `start`; one filtered set per depth.
struct Levels {
  std::vector<std::vector<CandidatePtr>> sets;
  bool truncated = false;
};

Levels run_levels(const CandidatePtr& start, int depth, const SearchConfig& cfg,
                  const Oracle& oracle, const Target& target) {
  Levels out;
  std::vector<CandidatePtr> frontier{start};
  for (int d = 1; d <= depth; ++d) {
    auto candidates = expand(frontier, cfg.gen_modes, oracle, target, cfg.beam);
    if (candidates.empty()) {
      out.truncated = true;
      break;
    }
    frontier = filter_top_n(candidates, cfg.n);
    out.sets.push_back(frontier);
  }
  return out;
}

// Union of the per-depth sets, shallower chain first on duplicate text.
std::vector<CandidatePtr> merged_pool(const Levels& levels) {
  std::vector<CandidatePtr> pool;
  std::unordered_set<std::string> seen;
  for (const auto& set : levels.sets) {
    for (const auto& c : set) {
      if (seen.insert(c->sentence.key()).second) pool.push_back(c);
    }
  }
  return pool;
}

void append_chain(Proof& proof, const ScoredCandidate& leaf, int from_depth) {
  for (const ScoredCandidate* node : leaf.chain()) {
    if (node->depth <= from_depth) continue;
    const int prev = static_cast<int>(proof.steps.size());
    auto& step = proof.add_inferred(node->sentence, *node->mode, {prev});
    step.sim = node->sim_to_hypothesis;
  }
}

Proof proof_from_chain(const ScoredCandidate& leaf, const Sentence& hypothesis,
                       SearchMethod method, const SearchConfig& cfg) {
  const auto nodes = leaf.chain();
  Proof p("", nodes.front()->sentence, hypothesis);
  p.search_method = method;
  p.config = cfg.to_json();
  append_chain(p, leaf, 0);
  return p;
}

Proof empty_proof(const Sentence& premise, const Sentence& hypothesis, SearchMethod method,
                  const SearchConfig& cfg, std::string warning) {
  Proof p("", premise, hypothesis);
  p.search_method = method;
  p.config = cfg.to_json();
  p.warnings.push_back(std::move(warning));
  return p;
}

std::vector<Proof> proofs_from(std::span<const CandidatePtr> ranked, const Sentence& premise,
                               const Sentence& hypothesis, SearchMethod method,
                               const SearchConfig& cfg, const Levels& levels) {
  std::vector<Proof> out;
  if (ranked.empty()) {
    out.push_back(empty_proof(premise, hypothesis, method, cfg,
                              "no candidates generated from the premise"));
    return out;
  }
  for (std::size_t i = 0; i < ranked.size() && static_cast<int>(i) < cfg.top_proofs; ++i) {
    out.push_back(proof_from_chain(*ranked[i], hypothesis, method, cfg));
    if (levels.truncated) {
      out.back().warnings.push_back("search stopped at depth " +
                                    std::to_string(levels.sets.size()) + " of " +
                                    std::to_string(cfg.max_depth) + ": no candidates");
    }
  }
  return out;
}

}  // namespace

std::vector<CandidatePtr> expand(std::span<const CandidatePtr> frontier,
                                 std::span<const GenerationMode> modes, const Oracle& oracle,
                                 const Target& target, int beam) {
  if (frontier.empty()) throw InvalidInput("expand: empty frontier");
  struct Pending {
    Sentence sentence;
    GenerationMode mode;
    CandidatePtr parent;
  };
  std::vector<Pending> pending;
  for (const auto& item : frontier) {
    std::unordered_set<std::string> lineage;
    for (const auto* node : item->chain()) lineage.insert(node->sentence.key());
    for (auto mode : modes) {
      for (auto& s : generate(oracle, mode, item->sentence, beam, beam)) {
        if (lineage.count(s.key())) continue;  // degenerate: loops back
        pending.push_back({std::move(s), mode, item});
      }
    }
  }
  if (pending.empty()) return {};

  // Embed each distinct text once.
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<Sentence> unique;
  for (const auto& p : pending) {
    if (slot.emplace(p.sentence.key(), unique.size()).second) unique.push_back(p.sentence);
  }
  const auto vectors = embed(oracle, unique);

  std::vector<CandidatePtr> out;
  std::unordered_map<std::string, std::size_t> position;
  for (auto& p : pending) {
    const std::string key = p.sentence.key();
    const double sim = target.sim(vectors[slot.at(key)]);
    auto it = position.find(key);
    if (it == position.end()) {
      position.emplace(key, out.size());
      out.push_back(child(std::move(p.sentence), sim, p.mode, p.parent));
    } else if (p.parent->sim_to_hypothesis > out[it->second]->parent->sim_to_hypothesis) {
      out[it->second] = child(std::move(p.sentence), sim, p.mode, p.parent);
    }
  }
  return out;
}

std::vector<CandidatePtr> filter_top_n(std::span<const CandidatePtr> candidates, int n) {
  if (n < 1) throw InvalidInput("filter_top_n: n must be >= 1");
  std::vector<CandidatePtr> out(candidates.begin(), candidates.end());
  std::stable_sort(out.begin(), out.end(), ranks_before);
  if (out.size() > static_cast<std::size_t>(n)) out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<Proof> level_search(const Sentence& premise, const Sentence& hypothesis,
                                const SearchConfig& cfg, const Oracle& oracle) {
  cfg.validate();
  const Target target(oracle, hypothesis);
  const auto levels = run_levels(make_root(oracle, premise, target), cfg.max_depth, cfg,
                                 oracle, target);
  const std::vector<CandidatePtr> last =
      levels.sets.empty() ? std::vector<CandidatePtr>{} : levels.sets.back();
  return proofs_from(last, premise, hypothesis, SearchMethod::kLevel, cfg, levels);
}

std::vector<Proof> beam_search(const Sentence& premise, const Sentence& hypothesis,
                               const SearchConfig& cfg, const Oracle& oracle) {
  cfg.validate();
  const Target target(oracle, hypothesis);
  const auto levels = run_levels(make_root(oracle, premise, target), cfg.max_depth, cfg,
                                 oracle, target);
  const auto ranked = filter_top_n(merged_pool(levels), cfg.n);
  return proofs_from(ranked, premise, hypothesis, SearchMethod::kBeam, cfg, levels);
}

Proof fact_proof_search(const Sentence& premise, const Sentence& hypothesis,
                        const KBIndex& index, const SearchConfig& cfg, const Oracle& oracle,
                        const Tagger& tagger) {
  cfg.validate();
  const Target target(oracle, hypothesis);
  const CandidatePtr root = make_root(oracle, premise, target);
  const double sim_premise = root->sim_to_hypothesis;

  auto retrieval = retrieve_for_pair(index, premise, hypothesis, cfg.fact_top_k, oracle,
                                     tagger, cfg.cluster_threshold);

  // Screen every fact by composing it with the premise.
  json facts = json::array();
  std::vector<const Fact*> survivors;
  for (const auto& f : retrieval.facts) {
    json entry{{"kb_id", f.kb_id}, {"rank", f.rank}, {"score", f.score}, {"text", f.text}};
    try {
      const Sentence composed = compose(oracle, premise, Sentence(f.text), cfg.beam);
      const double sim = target.sim(embed(oracle, composed));
      entry["composition"] = composed.text();
      entry["sim"] = sim;
      if (sim < sim_premise) {
        entry["status"] = "discarded";
      } else {
        entry["status"] = "survived";
        survivors.push_back(&f);
      }
    } catch (const CompositionFailed&) {
      entry["status"] = "composition_failed";
    }
    facts.push_back(std::move(entry));
  }

  json meta{{"sim_premise", sim_premise},
            {"queries", retrieval.queries},
            {"keyword_groups", retrieval.groups},
            {"query_fallback", retrieval.used_fallback},
            {"facts", facts},
            {"fallback", false}};

  if (survivors.empty()) {
    if (!cfg.fallback_to_beam) {
      throw AllFactsDiscarded("all " + std::to_string(retrieval.facts.size()) +
                              " retrieved facts were discarded");
    }
    auto proofs = beam_search(premise, hypothesis, cfg, oracle);
    Proof p = std::move(proofs.front());
    p.warnings.insert(p.warnings.begin(),
                      "all retrieved facts discarded: fell back to beam search");
    meta["fallback"] = true;
    p.meta = meta;
    return p;
  }

  // Compose survivors in retriever-rank order.
  Proof proof("", premise, hypothesis);
  proof.search_method = SearchMethod::kFacts;
  proof.config = cfg.to_json();
  CandidatePtr current = root;
  std::unordered_set<std::string> lineage{premise.key()};
  json used = json::array();
  for (const Fact* f : survivors) {
    const Sentence fact(f->text);
    std::optional<Sentence> composed;
    try {
      composed = compose(oracle, current->sentence, fact, cfg.beam);
    } catch (const CompositionFailed&) {
    }
    if (!composed || lineage.count(composed->key())) {
      proof.warnings.push_back("fact " + f->kb_id + " skipped: no new composition");
      continue;
    }
    const int prev = current->depth == 0 ? 0 : static_cast<int>(proof.steps.size());
    const int fact_j = static_cast<int>(proof.steps.size()) + 1;
    proof.add_fact(fact, f->kb_id, f->rank);
    const double sim = target.sim(embed(oracle, *composed));
    proof.add_inferred(*composed, GenerationMode::kConclude, {prev, fact_j}).sim = sim;
    lineage.insert(composed->key());
    current = child(*composed, sim, GenerationMode::kConclude, current);
    used.push_back(f->kb_id);
  }
  meta["used"] = used;

  // Monotone closing when the composition is not yet close to H.
  json closing{{"applied", false}, {"steps", 0}};
  if (current->sim_to_hypothesis < cfg.close_threshold) {
    const auto levels = run_levels(current, cfg.max_depth, cfg, oracle, target);
    const auto pool = filter_top_n(merged_pool(levels), 1);
    if (!pool.empty() && pool.front()->sim_to_hypothesis > current->sim_to_hypothesis) {
      const int before = static_cast<int>(proof.steps.size());
      append_chain(proof, *pool.front(), current->depth);
      closing["applied"] = true;
      closing["steps"] = static_cast<int>(proof.steps.size()) - before;
      current = pool.front();
    }
  }
  closing["final_sim"] = current->sim_to_hypothesis;
  meta["closing"] = closing;
  proof.meta = meta;
  return proof;
}

std::vector<Proof> undirected_search(const Sentence& premise, const Sentence& hypothesis,
                                     const SearchConfig& cfg, const Oracle& oracle) {
  cfg.validate();
  const Target target(oracle, hypothesis);
  CandidatePtr current = make_root(oracle, premise, target);
  std::vector<std::string> warnings;

  for (int d = 1; d < cfg.max_depth; ++d) {
    std::unordered_set<std::string> lineage;
    for (const auto* node : current->chain()) lineage.insert(node->sentence.key());
    CandidatePtr next;
    for (auto mode : cfg.gen_modes) {
      for (auto& s : generate(oracle, mode, current->sentence, cfg.beam, cfg.beam)) {
        if (lineage.count(s.key())) continue;
        const double sim = target.sim(embed(oracle, s));
        next = child(std::move(s), sim, mode, current);
        break;
      }
      if (next) break;
    }
    if (!next) {
      warnings.push_back("generation stopped at depth " + std::to_string(d - 1));
      break;
    }
    current = next;
  }

  const CandidatePtr one[] = {current};
  const auto finals = filter_top_n(expand(one, cfg.gen_modes, oracle, target, cfg.beam),
                                   cfg.top_proofs);
  std::vector<Proof> out;
  if (finals.empty()) {
    if (current->depth == 0) {
      out.push_back(empty_proof(premise, hypothesis, SearchMethod::kNone, cfg,
                                "no candidates generated from the premise"));
      return out;
    }
    out.push_back(proof_from_chain(*current, hypothesis, SearchMethod::kNone, cfg));
    warnings.push_back("no final step generated");
  }
  for (const auto& leaf : finals) {
    out.push_back(proof_from_chain(*leaf, hypothesis, SearchMethod::kNone, cfg));
  }
  for (auto& p : out) p.warnings.insert(p.warnings.end(), warnings.begin(), warnings.end());
  return out;
}

}  // namespace proofsmith
