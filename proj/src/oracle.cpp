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

#include "proofsmith/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_set>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

namespace {

struct ModeInfo {
  GenerationMode mode;
  std::string_view name;
  std::string_view prefix;
  int arity;
};

constexpr std::array<ModeInfo, 7> kModeTable = {{
    {GenerationMode::kEntail, "entail", "entail: ", 1},
    {GenerationMode::kContradict, "contradict", "contradict: ", 1},
    {GenerationMode::kNeutral, "neutral", "neutral: ", 1},
    {GenerationMode::kMonotonic, "monotonic", "monotonic: ", 1},
    {GenerationMode::kConclude, "conclude", "conclude: ", 2},
    {GenerationMode::kExplain, "explain", "explain: ", 2},
    {GenerationMode::kProof, "proof", "proof: ", 2},
}};

const ModeInfo& info(GenerationMode mode) {
  for (const auto& m : kModeTable) {
    if (m.mode == mode) return m;
  }
  throw InvalidInput("unknown generation mode");
}

}  // namespace

std::string_view mode_name(GenerationMode mode) { return info(mode).name; }

GenerationMode parse_mode(std::string_view name) {
  for (const auto& m : kModeTable) {
    if (m.name == name) return m.mode;
  }
  throw InvalidInput("unknown generation mode: " + std::string(name));
}

std::string_view mode_prefix(GenerationMode mode) { return info(mode).prefix; }

GenerationMode mode_from_prefix(std::string_view prefix) {
  for (const auto& m : kModeTable) {
    if (m.prefix == prefix) return m.mode;
  }
  throw InvalidInput("unknown mode prefix: " + std::string(prefix));
}

int mode_arity(GenerationMode mode) { return info(mode).arity; }

std::string format_model_input(GenerationMode mode,
                               std::span<const std::string> inputs) {
  if (static_cast<int>(inputs.size()) != mode_arity(mode)) {
    throw InvalidInput("mode " + std::string(mode_name(mode)) + " takes " +
                       std::to_string(mode_arity(mode)) + " input(s), got " +
                       std::to_string(inputs.size()));
  }
  std::string out(mode_prefix(mode));
  out += inputs[0];
  if (inputs.size() == 2) {
    out += ' ';
    out += kSeparator;
    out += ' ';
    out += inputs[1];
  }
  return out;
}

std::string_view to_string(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment: return "entailment";
    case NliLabel::kNeutral: return "neutral";
    case NliLabel::kContradiction: return "contradiction";
  }
  return "neutral";
}

NliLabel parse_label(std::string_view name) {
  if (name == "entailment") return NliLabel::kEntailment;
  if (name == "neutral") return NliLabel::kNeutral;
  if (name == "contradiction") return NliLabel::kContradiction;
  throw InvalidInput("unknown NLI label: " + std::string(name));
}

PairJudgment make_judgment(std::string premise, std::string hypothesis,
                           double p_entail, double p_neutral,
                           double p_contradict) {
  for (double p : {p_entail, p_neutral, p_contradict}) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InvalidInput("judgment probability out of range");
    }
  }
  if (std::abs(p_entail + p_neutral + p_contradict - 1.0) > 1e-4) {
    throw InvalidInput("judgment probabilities do not sum to 1");
  }
  PairJudgment j{std::move(premise), std::move(hypothesis), p_entail,
                 p_neutral, p_contradict, NliLabel::kEntailment};
  if (p_entail >= p_neutral && p_entail >= p_contradict) {
    j.label = NliLabel::kEntailment;
  } else if (p_neutral >= p_contradict) {
    j.label = NliLabel::kNeutral;
  } else {
    j.label = NliLabel::kContradiction;
  }
  return j;
}

std::vector<std::vector<TokenTag>> Oracle::tag_texts(
    std::span<const std::string>) const {
  throw OracleUnavailable("oracle backend " + id() +
                          " does not provide a tagger");
}

std::vector<Sentence> generate(const Oracle& oracle, GenerationMode mode,
                               std::span<const Sentence> inputs, int k,
                               int beam) {
  if (k < 1) throw InvalidInput("generate: k must be positive");
  if (beam < 1) throw InvalidInput("generate: beam must be positive");
  if (static_cast<int>(inputs.size()) != mode_arity(mode)) {
    throw InvalidInput("generate: mode " + std::string(mode_name(mode)) +
                       " takes " + std::to_string(mode_arity(mode)) +
                       " input(s), got " + std::to_string(inputs.size()));
  }
  std::vector<std::string> texts;
  for (const auto& s : inputs) texts.push_back(s.text());
  auto raw = oracle.generate_candidates(mode, texts, std::max(beam, k), k);
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.score > b.score;
                   });
  std::vector<Sentence> out;
  std::unordered_set<std::string> seen;
  for (auto& c : raw) {
    if (static_cast<int>(out.size()) == k) break;
    if (trim(c.text).empty()) continue;
    std::optional<Sentence> s;
    try {
      s.emplace(std::move(c.text));
    } catch (const InvalidInput&) {
      continue;  // punctuation-only output
    }
    if (seen.insert(s->key()).second) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<Sentence> generate(const Oracle& oracle, GenerationMode mode,
                               const Sentence& input, int k, int beam) {
  return generate(oracle, mode, std::span<const Sentence>(&input, 1), k, beam);
}

std::vector<Embedding> embed(const Oracle& oracle,
                             std::span<const Sentence> texts) {
  if (texts.empty()) throw InvalidInput("embed: empty input list");
  std::vector<std::string> raw_texts;
  raw_texts.reserve(texts.size());
  for (const auto& s : texts) raw_texts.push_back(s.text());
  auto vectors = oracle.embed_texts(raw_texts);
  if (vectors.size() != texts.size()) {
    throw ProtocolError("embed: backend returned " +
                        std::to_string(vectors.size()) + " vectors for " +
                        std::to_string(texts.size()) + " texts");
  }
  const std::size_t dim = vectors.front().size();
  for (auto& v : vectors) {
    if (v.size() != dim || dim == 0) {
      throw ProtocolError("embed: inconsistent vector dimensions");
    }
    try {
      v = l2_normalize(std::move(v));
    } catch (const InvalidInput&) {
      throw ProtocolError("embed: backend returned a zero vector");
    }
  }
  return vectors;
}

Embedding embed(const Oracle& oracle, const Sentence& text) {
  return embed(oracle, std::span<const Sentence>(&text, 1)).front();
}

PairJudgment judge(const Oracle& oracle, const Sentence& premise,
                   const Sentence& hypothesis) {
  TextPair pair{premise.text(), hypothesis.text()};
  return judge(oracle, std::span<const TextPair>(&pair, 1)).front();
}

std::vector<PairJudgment> judge(const Oracle& oracle,
                                std::span<const TextPair> pairs) {
  if (pairs.empty()) return {};
  auto out = oracle.judge_pairs(pairs);
  if (out.size() != pairs.size()) {
    throw ProtocolError("judge: backend returned " +
                        std::to_string(out.size()) + " judgments for " +
                        std::to_string(pairs.size()) + " pairs");
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    try {
      out[i] = make_judgment(pairs[i].premise, pairs[i].hypothesis,
                             out[i].p_entail, out[i].p_neutral,
                             out[i].p_contradict);
    } catch (const InvalidInput& e) {
      throw ProtocolError(std::string("judge: ") + e.what());
    }
  }
  return out;
}

Sentence compose(const Oracle& oracle, const Sentence& s1, const Sentence& s2,
                 int beam) {
  const std::array<Sentence, 2> inputs{s1, s2};
  auto out = generate(oracle, GenerationMode::kConclude, inputs, 1, beam);
  if (out.empty()) {
    throw CompositionFailed("no composition for \"" + s1.text() + "\" + \"" +
                            s2.text() + "\"");
  }
  return std::move(out.front());
}

std::vector<TokenTag> OracleTagger::tag(const Sentence& sentence) const {
  const std::string text = sentence.text();
  auto tags = oracle_->tag_texts(std::span<const std::string>(&text, 1));
  if (tags.size() != 1) throw ProtocolError("tag: expected one tag list");
  return std::move(tags.front());
}

}  // namespace proofsmith
