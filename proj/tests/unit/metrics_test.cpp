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


#include "proofsmith/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"
#include "test_support.hpp"

namespace proofsmith {
namespace {

using testing::data_path;

std::vector<Proof> gold() { return read_proofs(data_path("mock_gold.rec")); }

Proof two_step() {
  Proof p("t", Sentence("a puppy runs in the snow"), Sentence("an animal runs"));
  p.add_inferred(Sentence("a dog runs in the snow"), GenerationMode::kEntail, {0});
  p.add_inferred(Sentence("an animal runs in the snow"), GenerationMode::kEntail, {1});
  return p;
}

// Judge that always fails, as an unreachable sidecar would.
class DeadJudge : public MockOracle {
 public:
  std::vector<PairJudgment> judge_pairs(std::span<const TextPair>) const override {
    throw OracleUnavailable("judge down");
  }
};

ProofMetrics fake(std::vector<NliLabel> labels) {
  ProofMetrics m;
  m.proof_id = "x";
  for (auto l : labels) {
    m.pair_labels.push_back(l);
    m.pair_p_entail.push_back(0.9);
    m.pair_bleu4.push_back(0.5);
    m.pair_jaccard.push_back(0.5);
  }
  m.num_steps = static_cast<int>(labels.size()) - 1;
  m.ph_label = NliLabel::kEntailment;
  m.keywords_intermediate_mean = 2.0;
  return m;
}

TEST(PairsTest, CountsFollowInferredSteps) {
  Proof p = two_step();
  EXPECT_EQ(consecutive_pairs(p, PairMode::kPlain).size(), 3u);
  p.steps.pop_back();
  auto one = consecutive_pairs(p, PairMode::kPlain);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].left.text(), "a puppy runs in the snow");
  EXPECT_EQ(one[1].right.text(), "an animal runs");

  p.steps.clear();
  std::vector<std::string> warnings;
  auto none = consecutive_pairs(p, PairMode::kPlain, &warnings);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_EQ(none[0].left.text(), p.premise.text());
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(PairsTest, FactConcatFoldsFactsIntoLeftSide) {
  Proof p("f", Sentence("a guitarist plays on the street"),
          Sentence("a person plays an instrument"));
  p.add_fact(Sentence("a guitarist is a musician"), "k1", 1);
  p.add_inferred(Sentence("a musician plays on the street"), GenerationMode::kConclude, {0, 1});
  auto plain = consecutive_pairs(p, PairMode::kPlain);
  auto concat = consecutive_pairs(p, PairMode::kFactConcat);
  ASSERT_EQ(plain.size(), 2u);
  ASSERT_EQ(concat.size(), 2u);
  EXPECT_EQ(plain[0].left.text(), "a guitarist plays on the street");
  EXPECT_EQ(concat[0].left.text(), "a guitarist plays on the street. a guitarist is a musician");
  EXPECT_EQ(concat[1].left.text(), plain[1].left.text());
  EXPECT_THROW(parse_pair_mode("both"), InvalidInput);
}

TEST(ScoreTest, GoldFixtureIsValidAndFullyEntailed) {
  MockOracle oracle;
  auto proofs = gold();
  ASSERT_GE(proofs.size(), 10u);
  for (const auto& p : proofs) {
    EXPECT_TRUE(proof_violations(p).empty()) << p.id;
    EXPECT_EQ(p.num_inferred(), 2) << p.id;
    auto m = score_proof(p, oracle, oracle.tagger());
    ASSERT_EQ(m.pair_labels.size(), 3u);
    for (const auto& l : m.pair_labels) EXPECT_EQ(l, NliLabel::kEntailment) << p.id;
    EXPECT_EQ(m.ph_label, NliLabel::kEntailment) << p.id;
    EXPECT_TRUE(m.errors.empty());
    EXPECT_FALSE(m.non_minimal()) << p.id;
  }
}

TEST(ScoreTest, MinimalityMatchesBruteForce) {
  MockOracle oracle;
  const Proof p = two_step();
  auto m = score_proof(p, oracle, oracle.tagger());
  auto pairs = consecutive_pairs(p, PairMode::kPlain);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_NEAR(m.pair_bleu4[i],
                testing::brute_force_bleu4(pairs[i].right.tokens(), pairs[i].left.tokens()),
                1e-12);
    EXPECT_NEAR(m.pair_jaccard[i],
                testing::brute_force_jaccard(pairs[i].left.tokens(), pairs[i].right.tokens()),
                1e-12);
  }
  EXPECT_EQ(m.num_steps, 2);
  ASSERT_TRUE(m.keywords_intermediate_mean);
}

TEST(ScoreTest, JudgeFailureIsRecordedNotThrown) {
  DeadJudge oracle;
  auto m = score_proof(two_step(), oracle, oracle.tagger());
  ASSERT_EQ(m.errors.size(), 1u);
  for (const auto& l : m.pair_labels) EXPECT_FALSE(l);
  EXPECT_TRUE(std::isnan(m.pair_p_entail[0]));
  EXPECT_FALSE(m.ph_label);
  EXPECT_GT(m.pair_jaccard[0], 0.0);
  auto r = aggregate({m});
  EXPECT_FALSE(r.ph.correctness);
  EXPECT_EQ(r.judge_errors, 1);
  ASSERT_TRUE(r.ph.bleu4);
}

TEST(ScoreTest, MetricsRecordRoundTrip) {
  MockOracle oracle;
  DeadJudge dead;
  auto dir = testing::temp_dir("metrics_rt");
  std::vector<ProofMetrics> ms{score_proof(two_step(), oracle, oracle.tagger()),
                               score_proof(two_step(), dead, dead.tagger())};
  const auto path = (dir / "m.jsonl").string();
  write_metrics(path, ms);
  auto back = read_metrics(path);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].to_json().dump(), ms[i].to_json().dump());
  }
}

TEST(AggregateTest, FirstAndLastPairGroups) {
  using L = NliLabel;
  auto a = fake({L::kEntailment, L::kEntailment, L::kEntailment});
  auto b = fake({L::kEntailment, L::kContradiction, L::kContradiction});
  auto r = aggregate({a, b});
  EXPECT_DOUBLE_EQ(*r.p_i1.correctness, 100.0);
  EXPECT_DOUBLE_EQ(*r.i1_in.correctness, 50.0);
  EXPECT_DOUBLE_EQ(*r.in_h.correctness, 50.0);
  EXPECT_DOUBLE_EQ(*r.steps, 2.0);
  EXPECT_DOUBLE_EQ(*r.in_h.jaccard, 50.0);
}

TEST(AggregateTest, InteriorPairsAveragePerProofFirst) {
  using L = NliLabel;
  // Four interior pairs, one entailed (25%), and one interior pair entailed
  // (100%): per-proof first gives 62.5, pooling would give 40.
  auto a = fake({L::kEntailment, L::kEntailment, L::kNeutral, L::kNeutral, L::kNeutral,
                 L::kEntailment});
  auto b = fake({L::kEntailment, L::kEntailment, L::kEntailment});
  auto r = aggregate({a, b});
  EXPECT_DOUBLE_EQ(*r.i1_in.correctness, 62.5);
  EXPECT_EQ(r.i1_in.pairs, 2);
  // A one-step proof has no interior pair.
  auto c = fake({L::kEntailment, L::kNeutral});
  auto r1 = aggregate({c});
  EXPECT_FALSE(r1.i1_in.correctness);
  EXPECT_DOUBLE_EQ(*r1.in_h.correctness, 0.0);
  // A zero-step proof only counts toward P-H and the step mean.
  auto z = fake({L::kEntailment});
  auto r0 = aggregate({z, b});
  EXPECT_EQ(r0.p_i1.pairs, 1);
  EXPECT_EQ(r0.ph.pairs, 2);
  EXPECT_DOUBLE_EQ(*r0.steps, 1.0);
  EXPECT_THROW(aggregate({}), InvalidInput);
}

TEST(AggregateTest, SingletonEqualsPerProofValues) {
  MockOracle oracle;
  auto m = score_proof(two_step(), oracle, oracle.tagger());
  auto r = aggregate({m}, "one");
  EXPECT_DOUBLE_EQ(*r.p_i1.bleu4, m.pair_bleu4[0]);
  EXPECT_DOUBLE_EQ(*r.i1_in.bleu4, m.pair_bleu4[1]);
  EXPECT_DOUBLE_EQ(*r.in_h.bleu4, m.pair_bleu4[2]);
  EXPECT_DOUBLE_EQ(*r.in_h.jaccard, 100.0 * m.pair_jaccard[2]);
  EXPECT_DOUBLE_EQ(*r.ph.jaccard, 100.0 * m.ph_jaccard);
  EXPECT_DOUBLE_EQ(*r.keywords_premise, m.keywords_premise);
  EXPECT_DOUBLE_EQ(*r.keywords_intermediate, *m.keywords_intermediate_mean);
  EXPECT_DOUBLE_EQ(*r.steps, 2.0);
}

TEST(ReportTest, ColumnLayout) {
  MockOracle oracle;
  std::vector<ProofMetrics> ms;
  for (const auto& p : gold()) ms.push_back(score_proof(p, oracle, oracle.tagger()));
  auto r = aggregate(ms, "Gold");
  EXPECT_EQ(*r.steps, 2.0);
  const auto text = format_report({r});
  const auto lines = split(text, '\n');
  ASSERT_GE(lines.size(), 4u);
  for (const char* h : {"Correctness", "P-H", "P-I1", "I1-In", "In-H", "# Steps", "# Keywords"}) {
    EXPECT_NE(lines[0].find(h), std::string::npos) << h;
  }
  EXPECT_NE(lines[3].find("2.00"), std::string::npos);
  // 4 correctness + 8 minimality + 1 steps + 3 keyword cells.
  int cells = 0;
  for (const auto& part : split(lines[3], ' ')) {
    if (!trim(part).empty() && part != "|") ++cells;
  }
  EXPECT_EQ(cells, 1 + 16);
  const auto j = r.to_json();
  EXPECT_EQ(j["correctness"].size(), 4u);
  EXPECT_EQ(j["minimality"].size(), 4u);
  EXPECT_EQ(j["keywords"].size(), 3u);
  EXPECT_EQ(j["steps"].get<double>(), 2.0);
}

TEST(BaselineTest, NegatedCorrectnessDropsBelowGold) {
  MockOracle oracle;
  std::vector<ProofMetrics> g, n;
  for (const auto& p : gold()) {
    g.push_back(score_proof(p, oracle, oracle.tagger()));
    auto neg = negate_gold(p, oracle);
    EXPECT_TRUE(proof_violations(neg).empty());
    EXPECT_EQ(neg.meta["baseline"], "negated");
    for (const auto& s : neg.steps) {
      ASSERT_EQ(s.flags.size(), 1u);
      EXPECT_EQ(s.flags[0], "negated");
    }
    n.push_back(score_proof(neg, oracle, oracle.tagger()));
  }
  auto rg = aggregate(g), rn = aggregate(n);
  EXPECT_LT(*rn.p_i1.correctness, *rg.p_i1.correctness);
  EXPECT_LT(*rn.in_h.correctness, *rg.in_h.correctness);
  EXPECT_DOUBLE_EQ(*rn.steps, 2.0);

  Proof empty("e", Sentence("a dog runs"), Sentence("an animal runs"));
  auto ne = negate_gold(empty, oracle);
  EXPECT_EQ(ne.warnings.size(), 1u);
}

TEST(BaselineTest, PerturbChangesExactlyCeilHalf) {
  MockOracle oracle;
  LexiconSubstituter sub(oracle.lexicon());
  EXPECT_EQ(perturb_count(0.5, 7), 4u);
  EXPECT_EQ(perturb_count(0.5, 6), 3u);
  EXPECT_EQ(perturb_count(0.3, 10), 3u);
  EXPECT_EQ(perturb_count(1.0, 5), 5u);
  EXPECT_THROW(perturb_count(0.0, 5), InvalidInput);
  EXPECT_THROW(perturb_count(1.5, 5), InvalidInput);

  std::vector<ProofMetrics> g, pm;
  for (const auto& p : gold()) {
    auto q = perturb_gold(p, 0.5, sub, 17);
    ASSERT_EQ(q.steps.size(), p.steps.size());
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      const auto& a = p.steps[i].sentence.tokens();
      const auto& b = q.steps[i].sentence.tokens();
      ASSERT_EQ(a.size(), b.size());
      std::size_t changed = 0;
      for (std::size_t t = 0; t < a.size(); ++t) changed += a[t] != b[t];
      EXPECT_EQ(changed, (a.size() + 1) / 2) << p.id << " step " << i + 1;
      EXPECT_EQ(q.steps[i].flags, std::vector<std::string>{"perturbed"});
    }
    EXPECT_EQ(serialize(q), serialize(perturb_gold(p, 0.5, sub, 17)));
    EXPECT_EQ(q.meta["perturb"]["seed"], 17);
    g.push_back(score_proof(p, oracle, oracle.tagger()));
    pm.push_back(score_proof(q, oracle, oracle.tagger()));
  }
  auto rg = aggregate(g), rp = aggregate(pm);
  EXPECT_LT(*rp.p_i1.jaccard, *rg.p_i1.jaccard);
  EXPECT_LT(*rp.in_h.jaccard, *rg.in_h.jaccard);

  auto p = gold().front();
  EXPECT_NE(serialize(perturb_gold(p, 0.5, sub, 17)), serialize(perturb_gold(p, 0.5, sub, 18)));
}

}  // namespace
}  // namespace proofsmith
