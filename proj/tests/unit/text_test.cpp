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

#include "proofsmith/text.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <regex>

#include "proofsmith/error.hpp"
#include "test_support.hpp"

namespace proofsmith {
namespace {

using ::proofsmith::testing::brute_force_bleu4;
using ::proofsmith::testing::brute_force_jaccard;
using ::proofsmith::testing::random_tokens;

// Reference splitter: lowercase, then take maximal runs of [a-z0-9] or
// non-ASCII bytes.
Tokens reference_split(const std::string& text) {
  std::string lower;
  for (char c : text) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  static const std::regex word("[a-z0-9\\x80-\\xff]+");
  Tokens out;
  for (auto it = std::sregex_iterator(lower.begin(), lower.end(), word);
       it != std::sregex_iterator(); ++it) {
    out.push_back(it->str());
  }
  return out;
}

TEST(NormalizeTokens, DocumentedExamples) {
  EXPECT_EQ(normalize_tokens("A man plays."), (Tokens{"a", "man", "plays"}));
  EXPECT_EQ(normalize_tokens("  Dog!  "), (Tokens{"dog"}));
  const Tokens hyphen{"a", "black", "haired", "man"};
  EXPECT_EQ(reference_split("A black-haired man"), hyphen);
  EXPECT_EQ(normalize_tokens("A black-haired man"), hyphen);
}

TEST(NormalizeTokens, KeepsDigitsAndCollapsesWhitespace) {
  EXPECT_EQ(normalize_tokens("3  dogs\tran\n 2km"),
            (Tokens{"3", "dogs", "ran", "2km"}));
}

TEST(NormalizeTokens, RejectsBlankText) {
  EXPECT_THROW(normalize_tokens(""), InvalidInput);
  EXPECT_THROW(normalize_tokens(" \t\n"), InvalidInput);
}

TEST(NormalizeTokens, MatchesReferenceSplitterAndIsIdempotent) {
  std::mt19937 rng(7);
  const std::string alphabet = "abcXYZ019 -,.!'\"\t";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(1, 40);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::string text;
    for (int k = len(rng); k > 0; --k) text.push_back(alphabet[pick(rng)]);
    if (reference_split(text).empty()) continue;
    const Tokens tokens = normalize_tokens(text);
    EXPECT_EQ(tokens, reference_split(text)) << text;
    EXPECT_EQ(normalize_tokens(join_tokens(tokens)), tokens);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(SentenceTest, Invariants) {
  Sentence s("The Dog runs.");
  EXPECT_EQ(s.tokens(), (Tokens{"the", "dog", "runs"}));
  EXPECT_EQ(s.key(), "the dog runs");
  EXPECT_THROW(Sentence("   "), InvalidInput);
  EXPECT_THROW(Sentence("?!"), InvalidInput);
  EXPECT_THROW(s.set_embedding({1.0, 1.0}), InvalidInput);
  s.set_embedding({0.6, 0.8});
  ASSERT_TRUE(s.embedding().has_value());
}

TEST(Bleu4, IdentityIsOne) {
  const Tokens six{"a", "man", "plays", "a", "red", "guitar"};
  EXPECT_DOUBLE_EQ(bleu4(six, six), 1.0);
  EXPECT_DOUBLE_EQ(bleu4(Tokens{"dog"}, Tokens{"dog"}), 1.0);
  EXPECT_DOUBLE_EQ(bleu4(Tokens{"a", "dog"}, Tokens{"a", "dog"}), 1.0);
}

TEST(Bleu4, ZeroOverlapIsAtSmoothingFloor) {
  const Tokens a{"a", "b", "c", "d"};
  const Tokens b{"e", "f", "g", "h"};
  EXPECT_LE(bleu4(a, b), kBleuEpsilon);
  EXPECT_GT(bleu4(a, b), 0.0);
}

TEST(Bleu4, FrozenExampleFromIndependentOracle) {
  // Frozen from a standalone nested-loop counter:
  // p1 = 4/5, p2 = 2/4, p3 = 1/3, p4 = eps/2, BP = 1.
  const Tokens earlier = normalize_tokens("the dog runs fast today");
  const Tokens later = normalize_tokens("the dog runs slowly today");
  EXPECT_NEAR(bleu4(later, earlier), 0.0028574404296987997, 1e-15);
  EXPECT_NEAR(bleu4(later, earlier), brute_force_bleu4(later, earlier), 1e-15);
  // Short candidate: vacuous 4-gram order, brevity penalty e^-1.
  EXPECT_NEAR(bleu4(normalize_tokens("the cat sat"),
                    normalize_tokens("the cat sat on the mat")),
              0.36787944117144233, 1e-15);
}

TEST(Bleu4, RejectsEmpty) {
  EXPECT_THROW(bleu4(Tokens{}, Tokens{"a"}), InvalidInput);
  EXPECT_THROW(bleu4(Tokens{"a"}, Tokens{}), InvalidInput);
}

TEST(Bleu4, AgreesWithBruteForceOnRandomLists) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 200; ++i) {
    auto c = random_tokens(rng, 1, 12, 6);
    auto r = random_tokens(rng, 1, 12, 6);
    ASSERT_NEAR(bleu4(c, r), brute_force_bleu4(c, r), 1e-9);
    ASSERT_NEAR(bleu4(c, c), 1.0, 1e-12);
    const double v = bleu4(c, r);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(Jaccard, Examples) {
  const Tokens abc{"a", "b", "c"}, bcd{"b", "c", "d"}, xyz{"x", "y", "z"};
  EXPECT_DOUBLE_EQ(jaccard(abc, abc), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(abc, xyz), 0.0);
  EXPECT_DOUBLE_EQ(jaccard(abc, bcd), 0.5);
  EXPECT_THROW(jaccard(Tokens{}, abc), InvalidInput);
}

TEST(Jaccard, SymmetricAndMatchesBruteForce) {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    auto a = random_tokens(rng, 1, 10, 8);
    auto b = random_tokens(rng, 1, 10, 8);
    ASSERT_NEAR(jaccard(a, b), brute_force_jaccard(a, b), 1e-9);
    ASSERT_DOUBLE_EQ(jaccard(a, b), jaccard(b, a));
    std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    ASSERT_EQ(jaccard(a, b) == 1.0, sa == sb);
  }
}

TEST(Cosine, Examples) {
  const std::vector<double> v{0.6, 0.8};
  EXPECT_NEAR(cosine(v, v), 1.0, 1e-12);
  EXPECT_NEAR(cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}), 0.0,
              1e-12);
  EXPECT_NEAR(cosine(v, std::vector<double>{0.8, 0.6}), 0.96, 1e-12);
}

TEST(Cosine, ScaleInvarianceAndErrors) {
  const std::vector<double> u{1.0, -2.0, 3.0}, w{0.5, 4.0, 1.0};
  std::vector<double> scaled{7.0, -14.0, 21.0};
  EXPECT_NEAR(cosine(u, w), cosine(scaled, w), 1e-12);
  EXPECT_THROW(cosine(u, std::vector<double>{1.0}), InvalidInput);
  EXPECT_THROW(cosine(u, std::vector<double>{0, 0, 0}), InvalidInput);
}

TEST(Tagger, KeywordCounts) {
  HeuristicTagger tagger;
  EXPECT_EQ(count_keywords(Sentence("a the of"), tagger), 0);
  EXPECT_EQ(count_keywords(Sentence("dog runs"), tagger), 2);
  const auto tags = tagger.tag(Sentence("A young man is playing a red guitar"));
  ASSERT_EQ(tags.size(), 8u);
  EXPECT_EQ(tags[1].tag, PosTag::kAdjective);
  EXPECT_EQ(tags[2].tag, PosTag::kNoun);
  EXPECT_EQ(tags[3].tag, PosTag::kOther);
  EXPECT_EQ(tags[4].tag, PosTag::kVerb);
  EXPECT_EQ(tags[6].tag, PosTag::kAdjective);
  EXPECT_EQ(tags[7].tag, PosTag::kNoun);
}

TEST(Tagger, DeterministicAndClosedTagSet) {
  HeuristicTagger tagger;
  Sentence s("The quick dogs barked loudly at 3 famous strangers");
  EXPECT_EQ(tagger.tag(s), tagger.tag(s));
  for (auto tag : {PosTag::kNoun, PosTag::kVerb, PosTag::kAdjective, PosTag::kOther}) {
    EXPECT_EQ(parse_pos_tag(to_string(tag)), tag);
  }
  EXPECT_THROW(parse_pos_tag("adverb"), InvalidInput);
}

}  // namespace
}  // namespace proofsmith
