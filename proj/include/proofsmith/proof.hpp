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


// Proof records. One JSON object per line, keys sorted, so a parsed and
// re-serialized record is byte-identical to its input:
//
//   {"config":{..},"hypothesis":"..","id":"..","label":"entailment",
//    "meta":{..},"premise":"..","search_method":"level",
//    "steps":[{"j":1,"kind":"inferred","provenance":{"mode":"entail",
//              "refs":[0]},"text":"..","sim":0.93,"flags":[..]},
//             {"j":2,"kind":"fact","provenance":{"kb_id":"f01","rank":1},
//              "text":".."}],
//    "warnings":[..]}
//
// "sim" (cosine to the hypothesis) and "flags" are optional.

#ifndef PROOFSMITH_PROOF_HPP_
#define PROOFSMITH_PROOF_HPP_

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proofsmith/oracle.hpp"

namespace proofsmith {

enum class StepKind { kInferred, kFact };

std::string_view to_string(StepKind kind);

// "gold" marks hand-authored reference proofs.
enum class SearchMethod { kLevel, kBeam, kFacts, kNone, kGold };

std::string_view to_string(SearchMethod method);
SearchMethod parse_search_method(std::string_view name);

struct ProofStep {
  int j = 0;
  StepKind kind = StepKind::kInferred;
  Sentence sentence;
  // Inferred steps: the mode and the input step indices (0 = premise).
  std::optional<GenerationMode> mode;
  std::vector<int> refs;
  // Fact steps.
  std::string kb_id;
  int fact_rank = 0;
  std::optional<double> sim;
  std::vector<std::string> flags;

  static ProofStep inferred(int j, Sentence s, GenerationMode mode, std::vector<int> refs);
  static ProofStep fact(int j, Sentence s, std::string kb_id, int rank);
};

struct Proof {
  std::string id;
  Sentence premise;
  Sentence hypothesis;
  NliLabel label = NliLabel::kEntailment;
  std::vector<ProofStep> steps;
  SearchMethod search_method = SearchMethod::kNone;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> warnings;
  nlohmann::json meta = nlohmann::json::object();

  Proof(std::string id, Sentence premise, Sentence hypothesis)
      : id(std::move(id)), premise(std::move(premise)), hypothesis(std::move(hypothesis)) {}

  int num_inferred() const;
  // Appends a step with the next index.
  ProofStep& add_inferred(Sentence s, GenerationMode mode, std::vector<int> refs);
  ProofStep& add_fact(Sentence s, std::string kb_id, int rank);
};

// Order, provenance-shape, rootedness and contiguity violations; empty when
// the proof is well formed.
std::vector<std::string> proof_violations(const Proof& proof);
// Throws InvalidInput listing the violations.
void validate(const Proof& proof);

nlohmann::json to_json(const Proof& proof);
Proof proof_from_json(const nlohmann::json& record);

std::string serialize(const Proof& proof);  // one line, no trailing newline
Proof parse_proof(std::string_view line);

void write_proofs(const std::string& path, const std::vector<Proof>& proofs);
std::vector<Proof> read_proofs(const std::string& path);

// One line of a pairs file: `id<TAB>premise<TAB>hypothesis<TAB>label`,
// UTF-8, no header. Blank lines and lines starting with '#' are skipped.
struct PairRecord {
  std::string id;
  Sentence premise;
  Sentence hypothesis;
  NliLabel label = NliLabel::kEntailment;
};

std::vector<PairRecord> parse_pairs(std::string_view tsv, const std::string& origin = "pairs");
std::vector<PairRecord> read_pairs(const std::string& path);

}  // namespace proofsmith

#endif  // PROOFSMITH_PROOF_HPP_
