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

// The single interface through which the rest of the library reaches any
// neural capability: next-step generation, sentence embedding, pairwise
// entailment judgment and (optionally) part-of-speech tagging.
//
// Backends implement the raw virtuals on Oracle. Callers use the free
// functions below, which enforce the contracts every backend must satisfy
// (arity, deduplication, unit-norm vectors, probability triples).

#ifndef PROOFSMITH_ORACLE_HPP_
#define PROOFSMITH_ORACLE_HPP_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proofsmith/text.hpp"

namespace proofsmith {

enum class GenerationMode {
  kEntail,
  kContradict,
  kNeutral,
  kMonotonic,
  kConclude,
  kExplain,
  kProof,
};

inline constexpr std::array<GenerationMode, 7> kAllModes = {
    GenerationMode::kEntail,   GenerationMode::kContradict,
    GenerationMode::kNeutral,  GenerationMode::kMonotonic,
    GenerationMode::kConclude, GenerationMode::kExplain,
    GenerationMode::kProof};

inline constexpr std::string_view kSeparator = "<sep>";
inline constexpr int kDefaultBeam = 10;

std::string_view mode_name(GenerationMode mode);          // "entail"
GenerationMode parse_mode(std::string_view name);          // inverse
std::string_view mode_prefix(GenerationMode mode);        // "entail: "
GenerationMode mode_from_prefix(std::string_view prefix);  // inverse
int mode_arity(GenerationMode mode);                       // 1 or 2

// The model-side input string, e.g. "conclude: s1 <sep> s2". The sidecar
// builds this from the wire request; exposed here so both sides can be
// checked against one fixture.
std::string format_model_input(GenerationMode mode,
                               std::span<const std::string> inputs);

enum class NliLabel { kEntailment, kNeutral, kContradiction };

std::string_view to_string(NliLabel label);
NliLabel parse_label(std::string_view name);

struct PairJudgment {
  std::string premise;
  std::string hypothesis;
  double p_entail = 0.0;
  double p_neutral = 0.0;
  double p_contradict = 0.0;
  NliLabel label = NliLabel::kNeutral;
};

// Validates the triple (non-negative, sums to 1 ± 1e-4) and sets the argmax
// label, ties resolved entail > neutral > contradict. Throws InvalidInput.
PairJudgment make_judgment(std::string premise, std::string hypothesis,
                           double p_entail, double p_neutral,
                           double p_contradict);

struct Candidate {
  std::string text;
  double score = 0.0;
};

struct TextPair {
  std::string premise;
  std::string hypothesis;
};

class Oracle {
 public:
  virtual ~Oracle() = default;

  // Stable backend identifier; part of cache keys and run manifests.
  virtual std::string id() const = 0;

  virtual std::vector<Candidate> generate_candidates(
      GenerationMode mode, std::span<const std::string> inputs, int beam,
      int num_return) const = 0;
  virtual std::vector<Embedding> embed_texts(
      std::span<const std::string> texts) const = 0;
  virtual std::vector<PairJudgment> judge_pairs(
      std::span<const TextPair> pairs) const = 0;

  // Optional capability; the default throws OracleUnavailable.
  virtual std::vector<std::vector<TokenTag>> tag_texts(
      std::span<const std::string> texts) const;
};

// Up to k candidates ordered by backend score, deduplicated on normalized
// tokens. Throws InvalidInput on k < 1 or an arity mismatch.
std::vector<Sentence> generate(const Oracle& oracle, GenerationMode mode,
                               std::span<const Sentence> inputs, int k,
                               int beam = kDefaultBeam);
std::vector<Sentence> generate(const Oracle& oracle, GenerationMode mode,
                               const Sentence& input, int k,
                               int beam = kDefaultBeam);

// One L2-normalized vector per input, all of one dimension.
std::vector<Embedding> embed(const Oracle& oracle,
                             std::span<const Sentence> texts);
Embedding embed(const Oracle& oracle, const Sentence& text);

PairJudgment judge(const Oracle& oracle, const Sentence& premise,
                   const Sentence& hypothesis);
std::vector<PairJudgment> judge(const Oracle& oracle,
                                std::span<const TextPair> pairs);

// Top-1 of generate(conclude, {s1, s2}). Throws CompositionFailed when the
// backend returns nothing.
Sentence compose(const Oracle& oracle, const Sentence& s1, const Sentence& s2,
                 int beam = kDefaultBeam);

// Tagger backed by the oracle's tag capability.
class OracleTagger : public Tagger {
 public:
  explicit OracleTagger(const Oracle& oracle) : oracle_(&oracle) {}
  std::vector<TokenTag> tag(const Sentence& sentence) const override;
  std::string id() const override { return "oracle:" + oracle_->id(); }

 private:
  const Oracle* oracle_;
};

}  // namespace proofsmith

#endif  // PROOFSMITH_ORACLE_HPP_
