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


// Automatic proof verification: per-pair correctness from the entailment
// judge, minimality proxies (BLEU-4, Jaccard, step and keyword counts),
// the negated and perturbed gold baselines, and corpus-level reports.

#ifndef PROOFSMITH_METRICS_HPP_
#define PROOFSMITH_METRICS_HPP_

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proofsmith/mock_oracle.hpp"
#include "proofsmith/oracle.hpp"
#include "proofsmith/proof.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

// plain: fact steps are skipped. fact_concat: the facts feeding a
// composition are appended to the left sentence of the pair that ends in it.
enum class PairMode { kPlain, kFactConcat };

std::string_view to_string(PairMode mode);
PairMode parse_pair_mode(std::string_view name);

struct StepPair {
  Sentence left;
  Sentence right;
};

// (P, I1), (I1, I2), ..., (In, H). A proof without inferred steps yields
// [(P, H)] and a warning.
std::vector<StepPair> consecutive_pairs(const Proof& proof, PairMode mode,
                                        std::vector<std::string>* warnings = nullptr);

struct ProofMetrics {
  std::string proof_id;
  PairMode mode = PairMode::kPlain;
  // One entry per consecutive pair; labels are unset where the judge failed.
  std::vector<std::optional<NliLabel>> pair_labels;
  std::vector<double> pair_p_entail;  // NaN where the judge failed
  std::vector<double> pair_bleu4;
  std::vector<double> pair_jaccard;
  int num_steps = 0;  // inferred steps
  // The premise-hypothesis pair itself.
  std::optional<NliLabel> ph_label;
  double ph_p_entail = 0.0;
  double ph_bleu4 = 0.0;
  double ph_jaccard = 0.0;
  double keywords_premise = 0.0;
  std::optional<double> keywords_intermediate_mean;  // unset without steps
  double keywords_hypothesis = 0.0;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;  // judge failures

  bool non_minimal() const;  // some consecutive pair has identical token sets
  nlohmann::json to_json() const;
  static ProofMetrics from_json(const nlohmann::json& j);
};

// Judge failures (OracleUnavailable, ProtocolError) are recorded in
// `errors` instead of thrown.
ProofMetrics score_proof(const Proof& proof, const Oracle& judge, const Tagger& tagger,
                         PairMode mode = PairMode::kPlain);

// Each inferred step becomes the top contradict generation of itself.
Proof negate_gold(const Proof& proof, const Oracle& oracle, int beam = kDefaultBeam);

class Substituter {
 public:
  virtual ~Substituter() = default;
  // A replacement for tokens[pos] that differs from it.
  virtual std::string substitute(const Tokens& tokens, std::size_t pos,
                                 SeededRng& rng) const = 0;
  virtual std::string id() const = 0;
};

// Draws uniformly from the lexicon's vocab pool.
class LexiconSubstituter : public Substituter {
 public:
  explicit LexiconSubstituter(const MockLexicon& lexicon);
  std::string substitute(const Tokens& tokens, std::size_t pos, SeededRng& rng) const override;
  std::string id() const override { return "lexicon-vocab:" + digest_; }

 private:
  std::vector<std::string> vocab_;
  std::string digest_;
};

// Number of positions perturbed in a step of w tokens.
std::size_t perturb_count(double ratio, std::size_t w);

// Replaces exactly perturb_count(ratio, w) token positions of every inferred
// step, chosen without replacement. Step j draws from derive_seed(seed, j).
Proof perturb_gold(const Proof& proof, double ratio, const Substituter& substituter,
                   std::uint64_t seed);

struct GroupStats {
  std::optional<double> correctness;  // percent entailed
  std::optional<double> bleu4;
  std::optional<double> jaccard;  // percent
  int pairs = 0;                  // contributing proofs
};

struct AggregateReport {
  std::string name;
  GroupStats ph, p_i1, i1_in, in_h;
  std::optional<double> steps;
  std::optional<double> keywords_premise, keywords_intermediate, keywords_hypothesis;
  int population = 0;
  int judge_errors = 0;

  nlohmann::json to_json() const;
};

AggregateReport aggregate(const std::vector<ProofMetrics>& metrics, std::string name = "");

// Aligned text table: correctness, minimality, steps and keyword groups.
std::string format_report(const std::vector<AggregateReport>& rows);

void write_metrics(const std::string& path, const std::vector<ProofMetrics>& metrics);
std::vector<ProofMetrics> read_metrics(const std::string& path);

}  // namespace proofsmith

#endif  // PROOFSMITH_METRICS_HPP_
