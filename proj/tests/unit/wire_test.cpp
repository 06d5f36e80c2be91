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


#include "proofsmith/wire.hpp"

#include <gtest/gtest.h>

#include <set>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"
#include "test_support.hpp"

namespace proofsmith::wire {
namespace {

json fixture(const std::string& name) {
  return json::parse(read_file(testing::data_path("wire/" + name)));
}

std::set<std::string> keys(const json& object) {
  std::set<std::string> out;
  for (const auto& [k, v] : object.items()) out.insert(k);
  return out;
}

TEST(WireTest, GenerateRequestMatchesGolden) {
  GenerateRequest r{GenerationMode::kEntail, {"A dog runs in the snow."}, 10, 10};
  EXPECT_EQ(encode(r), fixture("generate_request.json"));
  auto back = decode_generate_request(fixture("generate_request.json"));
  EXPECT_EQ(back.mode, GenerationMode::kEntail);
  EXPECT_EQ(back.inputs, r.inputs);
  EXPECT_EQ(back.beam, 10);
  EXPECT_EQ(back.num_return, 10);
}

TEST(WireTest, GenerateRequestDefaultsAndValidation) {
  auto r = decode_generate_request(json::parse(R"({"mode":"conclude","inputs":["a","b"]})"));
  EXPECT_EQ(r.beam, kDefaultBeam);
  EXPECT_EQ(r.num_return, kDefaultBeam);
  EXPECT_THROW(decode_generate_request(json::parse(R"({"mode":"conclude","inputs":["a"]})")),
               ProtocolError);
  EXPECT_THROW(decode_generate_request(json::parse(R"({"mode":"poem","inputs":["a"]})")),
               ProtocolError);
  EXPECT_THROW(decode_generate_request(
                   json::parse(R"({"mode":"entail","inputs":["a"],"beam":2,"num_return":3})")),
               ProtocolError);
  EXPECT_THROW(decode_generate_request(
                   json::parse(R"({"mode":"entail","inputs":["a"],"beam":0})")),
               ProtocolError);
  EXPECT_THROW(decode_generate_request(json::parse("[]")), ProtocolError);
}

TEST(WireTest, GenerateResponseIgnoresMetadata) {
  auto golden = fixture("generate_response.json");
  auto cands = decode_generate_response(golden);
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0].text, "An animal runs in the snow.");
  EXPECT_DOUBLE_EQ(cands[0].score, -1.23);
  auto encoded = encode_generate_response(cands);
  EXPECT_EQ(encoded["candidates"], golden["candidates"]);
  EXPECT_EQ(keys(encoded["candidates"][0]), keys(golden["candidates"][0]));
  EXPECT_THROW(decode_generate_response(json::parse(R"({"candidates":[{"text":"x"}]})")),
               ProtocolError);
}

TEST(WireTest, EmbedRoundTrip) {
  const std::vector<std::string> texts{"a dog", "a cat"};
  EXPECT_EQ(encode_embed_request(texts), fixture("embed_request.json"));
  auto golden = fixture("embed_response.json");
  auto vectors = decode_embed_response(golden, 2);
  ASSERT_EQ(vectors.size(), 2u);
  EXPECT_EQ(vectors[1], (Embedding{0.0, 0.6, 0.8}));
  EXPECT_EQ(encode_embed_response(vectors), golden);
  EXPECT_THROW(decode_embed_response(golden, 3), ProtocolError);
  EXPECT_THROW(decode_embed_response(json::parse(R"({"dim":2,"vectors":[[1,0,0]]})"), 1),
               ProtocolError);
  EXPECT_THROW(decode_embed_request(json::parse(R"({"texts":[]})")), ProtocolError);
}

TEST(WireTest, JudgeRoundTrip) {
  const std::vector<TextPair> pairs{{"A dog runs.", "An animal runs."}};
  EXPECT_EQ(encode_judge_request(pairs), fixture("judge_request.json"));
  EXPECT_EQ(decode_judge_request(fixture("judge_request.json"))[0].hypothesis,
            "An animal runs.");
  auto golden = fixture("judge_response.json");
  auto judgments = decode_judge_response(golden, pairs);
  ASSERT_EQ(judgments.size(), 1u);
  EXPECT_EQ(judgments[0].label, NliLabel::kEntailment);
  EXPECT_EQ(judgments[0].premise, "A dog runs.");
  EXPECT_EQ(encode_judge_response(judgments), golden);
  EXPECT_THROW(decode_judge_response(json::parse(
                   R"({"judgments":[{"p_entail":0.9,"p_neutral":0.9,"p_contradict":0.0}]})"),
                   pairs),
               ProtocolError);
}

TEST(WireTest, TagRoundTrip) {
  const std::vector<std::string> texts{"dog runs"};
  EXPECT_EQ(encode_tag_request(texts), fixture("tag_request.json"));
  auto golden = fixture("tag_response.json");
  auto tags = decode_tag_response(golden, 1);
  ASSERT_EQ(tags[0].size(), 2u);
  EXPECT_EQ(tags[0][1].tag, PosTag::kVerb);
  EXPECT_EQ(encode_tag_response(tags), golden);
  EXPECT_THROW(decode_tag_response(json::parse(R"({"tags":[[["dog","pronoun"]]]})"), 1),
               ProtocolError);
}

TEST(WireTest, ModePrefixTableMatchesSharedFixture) {
  auto table = fixture("mode_prefixes.json");
  EXPECT_EQ(table.size(), kAllModes.size());
  for (auto mode : kAllModes) {
    EXPECT_EQ(table.at(std::string(mode_name(mode))).get<std::string>(),
              mode_prefix(mode));
  }
}

}  // namespace
}  // namespace proofsmith::wire
