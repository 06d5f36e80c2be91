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

// Deterministic stand-in for the model sidecar. Every answer is a pure
// function of (request, lexicon), so search and metric properties can be
// tested hermetically and checked by brute force.
//
// Lexicon file: UTF-8 TSV, `kind<TAB>word[<TAB>target]`, '#' comments.
//   hypernym  dog  animal     dog -> animal (one parent per word)
//   synonym   big  large      symmetric; groups are closed transitively
//   antonym   sits stands     symmetric
//   plural    man  men        irregular plural forms
//   adjective black           droppable modifier (monotonic mode)
//   verb      chases          extra verb for the tagger
//   neutral   tall            adjective inserted by neutral mode
//   vocab     zebra           replacement pool for perturbation
//
// Generation (candidates scored -0.1 * position, outputs lowercase):
//   entail      one hypernym rewrite per position, then one synonym rewrite
//               per (position, synonym); plurals preserved, articles fixed.
//   monotonic   drop each adjective; then truncate before each preposition
//               at position >= 2.
//   contradict  negate (insert "not" after the first is/are/was/were,
//               remove it if already present, else replace a leading
//               article with "no", else prefix "it is not true that"),
//               then one antonym swap per position.
//   neutral     insert each neutral adjective not already present before
//               the first noun.
//   conclude    (a) isa fact "[a] X is [a] Y" substitutes X -> Y in the
//               other sentence; (b) rule "all A N are B" rewrites
//               "... is A" to "... is B"; (c) chain "S V1 ... Z ..." +
//               "Z V2 W" -> "S V2' W" with number agreement.
//   explain     "a X is a Y" for each premise word X with an ancestor Y
//               occurring in the hypothesis.
//   proof       "a X is a Y" for X only in the first input and Y only in
//               the conclusion with Y an ancestor of X.
//
// Embedding: for each content token (all tokens if none), canonicalized
// (singular form, then the alphabetically first member of its synonym
// group), add a signed one-hot feature at hash("w:" + token) and, when the
// token belongs to the hypernym taxonomy, at hash("c:" + root). Hash is
// FNV-1a 64; bucket = h % dim; sign = top bit. The sum is L2-normalized.
//
// Judge over canonical content tokens, polarity from negators
// (not/no/never/nobody/nothing/none):
//   antonym clash between the sentences            -> contradiction
//   same polarity, positive: premise covers hyp    -> entailment
//   same polarity, negative: hyp covers premise    -> entailment
//   polarity differs and either side covers other  -> contradiction
//   otherwise                                      -> neutral
// where A covers B iff every token of B equals, or is an ancestor of, some
// token of A. The winning label gets 0.90, the other two 0.05 each.

#ifndef PROOFSMITH_MOCK_ORACLE_HPP_
#define PROOFSMITH_MOCK_ORACLE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "proofsmith/oracle.hpp"

namespace proofsmith {

class MockLexicon {
 public:
  // The lexicon compiled into the library (data/mock_lexicon.tsv).
  static const MockLexicon& builtin();
  static MockLexicon parse(std::string_view tsv);
  static MockLexicon load(const std::string& path);

  std::string digest() const { return digest_; }

  // Singular form of a known word; unknown words are returned unchanged.
  std::string singular(std::string_view word) const;
  bool is_plural(std::string_view word) const;
  std::string plural(std::string_view singular_word) const;

  std::optional<std::string> hypernym(std::string_view word) const;
  // Hypernym chain above the singular form, nearest first.
  std::vector<std::string> ancestors(std::string_view word) const;
  // Topmost ancestor, the word itself if it heads a chain, or "" when the
  // word is not in the taxonomy.
  std::string taxonomy_root(std::string_view word) const;
  std::vector<std::string> synonyms(std::string_view word) const;
  std::vector<std::string> antonyms(std::string_view word) const;
  // singular() followed by the synonym-group representative.
  std::string canonical(std::string_view word) const;

  bool is_adjective(std::string_view word) const;
  const std::vector<std::string>& adjectives() const { return adjectives_; }
  const std::vector<std::string>& verbs() const { return verbs_; }
  const std::vector<std::string>& neutral_adjectives() const {
    return neutral_;
  }
  const std::vector<std::string>& vocabulary() const { return vocab_; }

 private:
  std::map<std::string, std::string> hypernym_;
  std::map<std::string, std::string> synonym_root_;
  std::map<std::string, std::vector<std::string>> synonym_group_;
  std::map<std::string, std::set<std::string>> antonym_;
  std::map<std::string, std::string> plural_of_;
  std::map<std::string, std::string> singular_of_;
  std::vector<std::string> adjectives_;
  std::vector<std::string> verbs_;
  std::vector<std::string> neutral_;
  std::vector<std::string> vocab_;
  std::string digest_;

  bool known(std::string_view word) const;
};

// Rewrites "a"/"an" to agree with the following word's first letter.
void fix_articles(Tokens& tokens);

class MockOracle : public Oracle {
 public:
  static constexpr std::size_t kDefaultDim = 512;

  explicit MockOracle(MockLexicon lexicon = MockLexicon::builtin(),
                      std::size_t dim = kDefaultDim);

  std::string id() const override;
  std::vector<Candidate> generate_candidates(
      GenerationMode mode, std::span<const std::string> inputs, int beam,
      int num_return) const override;
  std::vector<Embedding> embed_texts(
      std::span<const std::string> texts) const override;
  std::vector<PairJudgment> judge_pairs(
      std::span<const TextPair> pairs) const override;
  std::vector<std::vector<TokenTag>> tag_texts(
      std::span<const std::string> texts) const override;

  const MockLexicon& lexicon() const { return lexicon_; }
  const HeuristicTagger& tagger() const { return tagger_; }
  std::size_t dim() const { return dim_; }

  // Unranked candidate token lists for a mode, before truncation.
  std::vector<Tokens> rewrites(GenerationMode mode,
                               std::span<const Tokens> inputs) const;
  NliLabel judge_label(const Tokens& premise, const Tokens& hypothesis) const;
  Embedding embed_tokens(const Tokens& tokens) const;

 private:
  MockLexicon lexicon_;
  HeuristicTagger tagger_;
  std::size_t dim_;

  std::vector<Tokens> entail(const Tokens& in) const;
  std::vector<Tokens> monotonic(const Tokens& in) const;
  std::vector<Tokens> contradict(const Tokens& in) const;
  std::vector<Tokens> neutral(const Tokens& in) const;
  std::vector<Tokens> conclude(const Tokens& s1, const Tokens& s2) const;
  std::vector<Tokens> explain(const Tokens& p, const Tokens& h) const;
  std::vector<Tokens> proof(const Tokens& s1, const Tokens& c) const;

  std::optional<Tokens> apply_isa(const Tokens& fact, const Tokens& other) const;
  std::optional<Tokens> apply_universal(const Tokens& fact,
                                        const Tokens& other) const;
  std::optional<Tokens> apply_chain(const Tokens& s1, const Tokens& s2) const;
  std::vector<std::string> content(const Tokens& tokens) const;
  bool covers(const std::vector<std::string>& a,
              const std::vector<std::string>& b) const;
};

}  // namespace proofsmith

#endif  // PROOFSMITH_MOCK_ORACLE_HPP_
