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

// Deterministic text primitives shared by every other module.

#ifndef PROOFSMITH_TEXT_HPP_
#define PROOFSMITH_TEXT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proofsmith {

using Tokens = std::vector<std::string>;
using Embedding = std::vector<double>;

// Lowercases ASCII, treats every byte outside [a-z0-9] and the non-ASCII
// range as a separator and drops it. Hyphens and apostrophes therefore split
// words; digits are kept. Throws InvalidInput on empty/whitespace-only text.
Tokens normalize_tokens(std::string_view text);

std::string join_tokens(std::span<const std::string> tokens);

// normalize_tokens followed by join_tokens; the canonical key used for
// deduplication everywhere.
std::string normalized_key(std::string_view text);

// A validated sentence. Tokens are computed once at construction.
class Sentence {
 public:
  // Throws InvalidInput when the text is blank or yields no tokens.
  explicit Sentence(std::string text);

  const std::string& text() const { return text_; }
  const Tokens& tokens() const { return tokens_; }
  std::string key() const { return join_tokens(tokens_); }

  const std::optional<Embedding>& embedding() const { return embedding_; }
  // Throws InvalidInput unless the vector is unit-norm within 1e-6.
  void set_embedding(Embedding v);

  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.text_ == b.text_;
  }

 private:
  std::string text_;
  Tokens tokens_;
  std::optional<Embedding> embedding_;
};

// Smoothing added to zero n-gram match counts.
inline constexpr double kBleuEpsilon = 1e-9;

// Sentence-level cumulative BLEU-4, uniform weights, brevity penalty.
// A zero match count at order n contributes kBleuEpsilon / max(1, total_n);
// an order for which the candidate has no n-grams at all contributes 1.
double bleu4(std::span<const std::string> candidate,
             std::span<const std::string> reference);

// |A ∩ B| / |A ∪ B| over token sets.
double jaccard(std::span<const std::string> a, std::span<const std::string> b);

double cosine(std::span<const double> u, std::span<const double> v);

// Returns v / ||v||; throws InvalidInput on a zero vector.
Embedding l2_normalize(Embedding v);

enum class PosTag { kNoun, kVerb, kAdjective, kOther };

std::string_view to_string(PosTag tag);
PosTag parse_pos_tag(std::string_view name);

struct TokenTag {
  std::string token;
  PosTag tag;

  friend bool operator==(const TokenTag&, const TokenTag&) = default;
};

class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TokenTag> tag(const Sentence& sentence) const = 0;
  virtual std::string id() const = 0;
};

// Determiners, pronouns, prepositions, conjunctions, auxiliaries and
// negators. Never counted as keywords.
bool is_closed_class(std::string_view token);

// Stoplist + word lists + suffix rules; anything unresolved is a noun.
class HeuristicTagger : public Tagger {
 public:
  HeuristicTagger() = default;
  HeuristicTagger(std::vector<std::string> extra_verbs,
                  std::vector<std::string> extra_adjectives);

  std::vector<TokenTag> tag(const Sentence& sentence) const override;
  std::string id() const override { return "heuristic-v1"; }

  PosTag tag_word(std::string_view word, std::string_view previous,
                  PosTag previous_tag) const;

 private:
  std::vector<std::string> extra_verbs_;
  std::vector<std::string> extra_adjectives_;
};

// Number of noun, verb and adjective tokens.
int count_keywords(const Sentence& sentence, const Tagger& tagger);

}  // namespace proofsmith

#endif  // PROOFSMITH_TEXT_HPP_
