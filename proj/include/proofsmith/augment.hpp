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


// Labeled NLI pairs from the prover's generation modes, and mixed dataset
// export for downstream fine-tuning.

#ifndef PROOFSMITH_AUGMENT_HPP_
#define PROOFSMITH_AUGMENT_HPP_

#include <json.hpp>
#include <string>
#include <vector>

#include "proofsmith/oracle.hpp"
#include "proofsmith/proof.hpp"

namespace proofsmith {

// entail -> entailment, contradict -> contradiction, neutral -> neutral,
// monotonic -> entailment. Other modes throw InvalidInput.
NliLabel label_for_mode(GenerationMode mode);
bool is_augment_mode(GenerationMode mode);

struct AugmentExample {
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kEntailment;
  GenerationMode provenance_mode = GenerationMode::kEntail;
  std::string source_premise_id;

  nlohmann::json to_json() const;
  static AugmentExample from_json(const nlohmann::json& j);
};

struct SourcePremise {
  std::string id;
  Sentence text;
};

struct AugmentResult {
  std::vector<AugmentExample> examples;
  std::vector<std::string> warnings;  // one per skipped premise
};

// Top per_premise generations for every (premise, mode), in premise order
// then mode order. Deduplicated on (premise, hypothesis); the first mode
// wins. A premise whose generation call fails is skipped with a warning.
// jobs > 1 spreads premises over threads without changing the output.
AugmentResult generate_augment_set(const std::vector<SourcePremise>& premises,
                                   const std::vector<GenerationMode>& modes, int per_premise,
                                   const Oracle& oracle, int jobs = 1, int beam = kDefaultBeam);

void write_augment(const std::string& path, const std::vector<AugmentExample>& examples);
std::vector<AugmentExample> read_augment(const std::string& path);

// `premise<TAB>hypothesis<TAB>label`, UTF-8, no header.
struct LabeledPair {
  std::string premise;
  std::string hypothesis;
  NliLabel label = NliLabel::kEntailment;
  std::string origin;  // "base" or the provenance mode; not written
};

std::vector<LabeledPair> parse_labeled_pairs(std::string_view tsv,
                                             const std::string& origin = "dataset");
std::vector<LabeledPair> read_labeled_pairs(const std::string& path);
void write_labeled_pairs(const std::string& path, const std::vector<LabeledPair>& pairs);

struct ExportOptions {
  double base_fraction = 1.0;
  // Augment size as a fraction of |base|: floor(fraction * |base|).
  double augment_fraction = 0.0;
  std::uint64_t seed = 0;
  // Split the augment budget equally across the modes present (the first
  // modes in enum order take the remainder); otherwise sample the pool
  // uniformly.
  bool equal_mode_shares = true;
};

struct ExportResult {
  std::vector<LabeledPair> rows;
  nlohmann::json manifest;  // counts, seed, fractions, provenance histogram
};

// Base pairs are deduplicated first; augment examples that repeat a base
// pair or each other are dropped from the pool. Throws Shortfall when a
// pool cannot cover its share, InvalidInput on fractions outside [0, 1].
ExportResult export_dataset(const std::vector<LabeledPair>& base,
                            const std::vector<AugmentExample>& augment,
                            const ExportOptions& options);

}  // namespace proofsmith

#endif  // PROOFSMITH_AUGMENT_HPP_
