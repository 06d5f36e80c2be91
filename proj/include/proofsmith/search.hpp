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


// Proof search: unconstrained level and beam search, search with external
// facts, and the undirected "none" baseline.

#ifndef PROOFSMITH_SEARCH_HPP_
#define PROOFSMITH_SEARCH_HPP_

#include <json.hpp>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proofsmith/kb.hpp"
#include "proofsmith/oracle.hpp"
#include "proofsmith/proof.hpp"

namespace proofsmith {

struct SearchConfig {
  int n = 10;
  int max_depth = 2;
  int top_proofs = 2;
  std::vector<GenerationMode> gen_modes{GenerationMode::kEntail, GenerationMode::kMonotonic};
  int fact_top_k = kDefaultFactTopK;
  double close_threshold = 0.80;
  int beam = kDefaultBeam;
  double cluster_threshold = kDefaultClusterThreshold;
  // When every retrieved fact is discarded: beam search (true) or error.
  bool fallback_to_beam = true;

  void validate() const;  // throws InvalidInput
  nlohmann::json to_json() const;
  // Overrides fields present in `j`; unknown keys are an error.
  void apply_json(const nlohmann::json& j);
};

struct ScoredCandidate;
using CandidatePtr = std::shared_ptr<const ScoredCandidate>;

struct ScoredCandidate {
  Sentence sentence;
  double sim_to_hypothesis = 0.0;
  std::optional<GenerationMode> mode;  // unset for the root
  CandidatePtr parent;                 // null for the root
  int depth = 0;

  // Sentences from the root down to this candidate, inclusive.
  std::vector<const ScoredCandidate*> chain() const;
};

// Search target: the hypothesis and its embedding.
class Target {
 public:
  Target(const Oracle& oracle, Sentence hypothesis);
  const Sentence& hypothesis() const { return hypothesis_; }
  const Embedding& embedding() const { return embedding_; }
  double sim(const Embedding& v) const;

 private:
  Sentence hypothesis_;
  Embedding embedding_;
};

CandidatePtr make_root(const Oracle& oracle, const Sentence& premise, const Target& target);

// One generation round from every frontier item under every mode. A
// candidate equal to its source or any of the source's ancestors is
// dropped; duplicates keep the parent closer to the hypothesis (first seen
// on ties). Output is in generation order.
std::vector<CandidatePtr> expand(std::span<const CandidatePtr> frontier,
                                 std::span<const GenerationMode> modes, const Oracle& oracle,
                                 const Target& target, int beam = kDefaultBeam);

// Top n by similarity, ties by normalized text, then input order.
std::vector<CandidatePtr> filter_top_n(std::span<const CandidatePtr> candidates, int n);

std::vector<Proof> level_search(const Sentence& premise, const Sentence& hypothesis,
                                const SearchConfig& cfg, const Oracle& oracle);

std::vector<Proof> beam_search(const Sentence& premise, const Sentence& hypothesis,
                               const SearchConfig& cfg, const Oracle& oracle);

// Throws AllFactsDiscarded when nothing survives and fallback is off.
Proof fact_proof_search(const Sentence& premise, const Sentence& hypothesis,
                        const KBIndex& index, const SearchConfig& cfg, const Oracle& oracle,
                        const Tagger& tagger);

// Top-1 generation for all but the last step; the last step is the
// candidate closest to the hypothesis.
std::vector<Proof> undirected_search(const Sentence& premise, const Sentence& hypothesis,
                                     const SearchConfig& cfg, const Oracle& oracle);

}  // namespace proofsmith

#endif  // PROOFSMITH_SEARCH_HPP_
