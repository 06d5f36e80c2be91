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

#include "proofsmith/mock_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "proofsmith/error.hpp"
#include "test_support.hpp"

namespace proofsmith {
namespace {

std::vector<std::string> texts(const std::vector<Sentence>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.text());
  return out;
}

class MockOracleTest : public ::testing::Test {
 protected:
  MockOracle oracle_;
};

TEST(GenerationModeTest, PrefixTableIsBijective) {
  std::set<std::string_view> prefixes;
  for (auto mode : kAllModes) {
    EXPECT_EQ(parse_mode(mode_name(mode)), mode);
    EXPECT_EQ(mode_from_prefix(mode_prefix(mode)), mode);
    prefixes.insert(mode_prefix(mode));
  }
  EXPECT_EQ(prefixes.size(), kAllModes.size());
  EXPECT_EQ(mode_prefix(GenerationMode::kEntail), "entail: ");
  EXPECT_EQ(mode_prefix(GenerationMode::kProof), "proof: ");
  EXPECT_THROW(parse_mode("summarize"), InvalidInput);
}

TEST(GenerationModeTest, ModelInputFormatting) {
  const std::vector<std::string> two{"Bob is green", "All green people are rough"};
  EXPECT_EQ(format_model_input(GenerationMode::kConclude, two),
            "conclude: Bob is green <sep> All green people are rough");
  const std::vector<std::string> one{"A dog runs."};
  EXPECT_EQ(format_model_input(GenerationMode::kEntail, one), "entail: A dog runs.");
  EXPECT_THROW(format_model_input(GenerationMode::kExplain, one), InvalidInput);
}

TEST(PairJudgmentTest, LabelIsArgmaxWithTieOrder) {
  EXPECT_EQ(make_judgment("p", "h", 0.5, 0.3, 0.2).label, NliLabel::kEntailment);
  EXPECT_EQ(make_judgment("p", "h", 0.4, 0.4, 0.2).label, NliLabel::kEntailment);
  EXPECT_EQ(make_judgment("p", "h", 0.2, 0.4, 0.4).label, NliLabel::kNeutral);
  EXPECT_EQ(make_judgment("p", "h", 0.1, 0.2, 0.7).label, NliLabel::kContradiction);
  EXPECT_THROW(make_judgment("p", "h", 0.5, 0.5, 0.5), InvalidInput);
  EXPECT_THROW(make_judgment("p", "h", -0.1, 0.6, 0.5), InvalidInput);
}

TEST_F(MockOracleTest, EntailEnumeratesLexiconRewrites) {
  // dog -> animal at position 1, snow -> precipitation at position 5; no
  // synonyms apply.
  const auto out = generate(oracle_, GenerationMode::kEntail,
                            Sentence("a dog runs in the snow"), 10);
  EXPECT_EQ(texts(out), (std::vector<std::string>{
                            "an animal runs in the snow",
                            "a dog runs in the precipitation"}));
}

TEST_F(MockOracleTest, EntailKeepsPluralsAndAppliesSynonyms) {
  const auto out = generate(oracle_, GenerationMode::kEntail,
                            Sentence("two big dogs chase men"), 10);
  EXPECT_EQ(texts(out), (std::vector<std::string>{
                            "two big animals chase men",
                            "two big dogs chase people",
                            "two large dogs chase men"}));
}

TEST_F(MockOracleTest, MonotonicDropsModifiersAndPhrases) {
  const auto out = generate(oracle_, GenerationMode::kMonotonic,
                            Sentence("a black dog runs in the snow"), 10);
  EXPECT_EQ(texts(out), (std::vector<std::string>{"a dog runs in the snow",
                                                  "a black dog runs"}));
  // Predicative adjectives stay.
  EXPECT_TRUE(generate(oracle_, GenerationMode::kMonotonic,
                       Sentence("the dog is black"), 10)
                  .empty());
}

TEST_F(MockOracleTest, ContradictNegatesFirst) {
  auto out = generate(oracle_, GenerationMode::kContradict,
                      Sentence("a man is sitting inside"), 10);
  EXPECT_EQ(texts(out), (std::vector<std::string>{"a man is not sitting inside",
                                                  "a man is standing inside",
                                                  "a man is sitting outside"}));
  out = generate(oracle_, GenerationMode::kContradict, Sentence("a dog runs"), 1);
  EXPECT_EQ(texts(out), std::vector<std::string>{"no dog runs"});
  out = generate(oracle_, GenerationMode::kContradict, Sentence("dogs run"), 1);
  EXPECT_EQ(texts(out), std::vector<std::string>{"it is not true that dogs run"});
  out = generate(oracle_, GenerationMode::kContradict, Sentence("it is not raining"), 1);
  EXPECT_EQ(texts(out), std::vector<std::string>{"it is raining"});
}

TEST_F(MockOracleTest, NeutralInsertsUnsupportedModifier) {
  const auto out = generate(oracle_, GenerationMode::kNeutral,
                            Sentence("a man plays a guitar"), 10);
  EXPECT_EQ(texts(out), (std::vector<std::string>{"a tall man plays a guitar",
                                                  "a hungry man plays a guitar"}));
}

TEST_F(MockOracleTest, ComposeRules) {
  EXPECT_EQ(compose(oracle_, Sentence("Bob is green"),
                    Sentence("All green people are rough"))
                .key(),
            "bob is rough");
  EXPECT_EQ(compose(oracle_, Sentence("Eruptions produce ash clouds"),
                    Sentence("Ash blocks sunlight"))
                .key(),
            "eruptions block sunlight");
  EXPECT_EQ(compose(oracle_, Sentence("a guitar is an instrument"),
                    Sentence("a woman plays a guitar"))
                .key(),
            "a woman plays an instrument");
  EXPECT_EQ(compose(oracle_, Sentence("a woman plays a guitar"),
                    Sentence("a guitar is an instrument"))
                .key(),
            "a woman plays an instrument");
}

TEST_F(MockOracleTest, ComposeFailsWhenNoRuleApplies) {
  EXPECT_THROW(compose(oracle_, Sentence("the sun is hot"),
                       Sentence("a woman plays a guitar")),
               CompositionFailed);
}

TEST_F(MockOracleTest, ExplainAndProofModes) {
  const std::array<Sentence, 2> ph{Sentence("a dog runs"), Sentence("an animal runs")};
  EXPECT_EQ(texts(generate(oracle_, GenerationMode::kExplain, ph, 5)),
            std::vector<std::string>{"a dog is an animal"});
  EXPECT_EQ(texts(generate(oracle_, GenerationMode::kProof, ph, 5)),
            std::vector<std::string>{"a dog is an animal"});
}

TEST_F(MockOracleTest, GenerateContracts) {
  const Sentence s("a dog runs");
  EXPECT_THROW(generate(oracle_, GenerationMode::kEntail, s, 0), InvalidInput);
  EXPECT_THROW(generate(oracle_, GenerationMode::kConclude, s, 1), InvalidInput);
  EXPECT_EQ(generate(oracle_, GenerationMode::kEntail, Sentence("a puppy sees a cat"), 1)
                .size(),
            1u);
}

TEST_F(MockOracleTest, CandidatesAreDuplicateFreeAndDeterministic) {
  for (const char* text : {"a big dog sits on a big couch", "the girl leaps",
                           "a young kid plays with a small ball in the snow"}) {
    for (auto mode : {GenerationMode::kEntail, GenerationMode::kMonotonic,
                      GenerationMode::kContradict, GenerationMode::kNeutral}) {
      const auto a = generate(oracle_, mode, Sentence(text), 10);
      const auto b = generate(oracle_, mode, Sentence(text), 10);
      EXPECT_EQ(texts(a), texts(b));
      std::set<std::string> keys;
      for (const auto& s : a) keys.insert(s.key());
      EXPECT_EQ(keys.size(), a.size());
    }
  }
}

// Independent re-derivation of the documented embedding scheme for a
// single content token.
std::vector<double> documented_embedding(const std::vector<std::string>& features,
                                         std::size_t dim) {
  std::vector<double> v(dim, 0.0);
  for (const auto& f : features) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : f) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    v[h % dim] += (h >> 63) ? -1.0 : 1.0;
  }
  double n = 0;
  for (double x : v) n += x * x;
  for (double& x : v) x /= std::sqrt(n);
  return v;
}

TEST_F(MockOracleTest, EmbeddingFollowsDocumentedScheme) {
  const auto dog = embed(oracle_, Sentence("dog"));
  const auto cat = embed(oracle_, Sentence("cat"));
  const auto dog_ref = documented_embedding({"w:dog", "c:creature"}, 512);
  const auto cat_ref = documented_embedding({"w:cat", "c:creature"}, 512);
  for (std::size_t i = 0; i < dog.size(); ++i) {
    ASSERT_DOUBLE_EQ(dog[i], dog_ref[i]);
    ASSERT_DOUBLE_EQ(cat[i], cat_ref[i]);
  }
  double dot = 0;
  for (std::size_t i = 0; i < 512; ++i) dot += dog_ref[i] * cat_ref[i];
  EXPECT_NEAR(cosine(dog, cat), dot, 1e-12);
  EXPECT_NEAR(cosine(dog, cat), 0.5, 1e-12);  // shared class, no collisions
  EXPECT_NEAR(cosine(embed(oracle_, Sentence("a dog")), embed(oracle_, Sentence("a dog"))),
              1.0, 1e-12);
}

TEST_F(MockOracleTest, EmbeddingsAreUnitAndDeterministic) {
  const std::vector<Sentence> batch{Sentence("a dog runs"), Sentence("a dog runs"),
                                    Sentence("the sofa is red")};
  const auto v = embed(oracle_, batch);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], v[1]);
  for (const auto& e : v) {
    double n = 0;
    for (double x : e) n += x * x;
    EXPECT_NEAR(n, 1.0, 1e-12);
  }
  // Synonyms embed identically.
  EXPECT_NEAR(cosine(embed(oracle_, Sentence("a couch")), embed(oracle_, Sentence("a sofa"))),
              1.0, 1e-12);
  EXPECT_THROW(embed(oracle_, std::span<const Sentence>{}), InvalidInput);
}

TEST_F(MockOracleTest, JudgeRules) {
  auto label = [&](const char* p, const char* h) {
    return judge(oracle_, Sentence(p), Sentence(h)).label;
  };
  EXPECT_EQ(label("a dog runs in the snow", "a dog runs in the snow"),
            NliLabel::kEntailment);
  EXPECT_EQ(label("a dog runs in the snow", "an animal runs"), NliLabel::kEntailment);
  EXPECT_EQ(label("an animal runs", "a dog runs"), NliLabel::kNeutral);
  EXPECT_EQ(label("a man is sitting", "a man is standing"), NliLabel::kContradiction);
  EXPECT_EQ(label("an animal is not running", "a dog is not running"),
            NliLabel::kEntailment);
  EXPECT_EQ(label("an animal is not running", "a creature is not running"),
            NliLabel::kNeutral);
  for (const char* x : {"a man is playing a guitar", "a dog runs", "children play"}) {
    const Sentence s(x);
    const auto neg = generate(oracle_, GenerationMode::kContradict, s, 1);
    ASSERT_EQ(neg.size(), 1u);
    EXPECT_EQ(judge(oracle_, s, neg[0]).label, NliLabel::kContradiction) << x;
    const auto j = judge(oracle_, s, s);
    EXPECT_EQ(j.label, NliLabel::kEntailment);
    EXPECT_NEAR(j.p_entail + j.p_neutral + j.p_contradict, 1.0, 1e-4);
  }
}

TEST(MockLexiconTest, ParsesAndValidates) {
  const auto lex = MockLexicon::parse(
      "# comment\nhypernym\tdog\tanimal\nsynonym\tbig\tlarge\nsynonym\tlarge\thuge\n"
      "plural\tman\tmen\nvocab\tzebra\n");
  EXPECT_EQ(lex.ancestors("dogs"), std::vector<std::string>{"animal"});
  EXPECT_EQ(lex.canonical("huge"), "big");
  EXPECT_EQ(lex.singular("men"), "man");
  EXPECT_EQ(lex.plural("man"), "men");
  EXPECT_EQ(lex.taxonomy_root("animal"), "animal");
  EXPECT_EQ(lex.taxonomy_root("zebra"), "");
  EXPECT_THROW(MockLexicon::parse("color\tred\n"), InvalidInput);
  EXPECT_THROW(MockLexicon::parse("hypernym\tdog\n"), InvalidInput);
  EXPECT_THROW(MockLexicon::parse("vocab\tTwo words\n"), InvalidInput);
  EXPECT_NE(lex.digest(), MockLexicon::builtin().digest());
}

TEST(MockLexiconTest, BuiltinChains) {
  const auto& lex = MockLexicon::builtin();
  EXPECT_EQ(lex.ancestors("puppy"),
            (std::vector<std::string>{"dog", "animal", "creature"}));
  EXPECT_EQ(lex.hypernym("kid"), std::optional<std::string>("person"));
  EXPECT_FALSE(lex.vocabulary().empty());
}

}  // namespace
}  // namespace proofsmith
