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

#include "proofsmith/error.hpp"

namespace proofsmith::wire {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw ProtocolError("wire: " + what);
}

const json& field(const json& body, const char* name) {
  if (!body.is_object()) fail("expected a JSON object");
  auto it = body.find(name);
  if (it == body.end()) fail(std::string("missing field '") + name + "'");
  return *it;
}

const json& array_field(const json& body, const char* name) {
  const json& v = field(body, name);
  if (!v.is_array()) fail(std::string("field '") + name + "' is not an array");
  return v;
}

double number(const json& v, const char* what) {
  if (!v.is_number()) fail(std::string(what) + " is not a number");
  return v.get<double>();
}

std::string string_value(const json& v, const char* what) {
  if (!v.is_string()) fail(std::string(what) + " is not a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const json& body, const char* name) {
  std::vector<std::string> out;
  for (const auto& v : array_field(body, name)) out.push_back(string_value(v, name));
  return out;
}

int positive_int(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    fail(std::string(what) + " must be a positive integer");
  }
  return v.get<int>();
}

}  // namespace

json encode(const GenerateRequest& request) {
  return json{{"mode", std::string(mode_name(request.mode))},
              {"inputs", request.inputs},
              {"beam", request.beam},
              {"num_return", request.num_return}};
}

GenerateRequest decode_generate_request(const json& body) {
  GenerateRequest r;
  try {
    r.mode = parse_mode(string_value(field(body, "mode"), "mode"));
  } catch (const InvalidInput& e) {
    fail(e.what());
  }
  r.inputs = string_array(body, "inputs");
  if (static_cast<int>(r.inputs.size()) != mode_arity(r.mode)) {
    fail("wrong number of inputs for mode " + std::string(mode_name(r.mode)));
  }
  if (body.contains("beam")) r.beam = positive_int(body["beam"], "beam");
  if (body.contains("num_return")) {
    r.num_return = positive_int(body["num_return"], "num_return");
  }
  if (r.num_return > r.beam) fail("num_return exceeds beam");
  return r;
}

json encode_generate_response(std::span<const Candidate> candidates) {
  json list = json::array();
  for (const auto& c : candidates) {
    list.push_back(json{{"text", c.text}, {"score", c.score}});
  }
  return json{{"candidates", list}};
}

std::vector<Candidate> decode_generate_response(const json& body) {
  std::vector<Candidate> out;
  for (const auto& c : array_field(body, "candidates")) {
    out.push_back({string_value(field(c, "text"), "candidate text"),
                   number(field(c, "score"), "candidate score")});
  }
  return out;
}

json encode_embed_request(std::span<const std::string> texts) {
  return json{{"texts", std::vector<std::string>(texts.begin(), texts.end())}};
}

std::vector<std::string> decode_embed_request(const json& body) {
  auto texts = string_array(body, "texts");
  if (texts.empty()) fail("texts must be non-empty");
  return texts;
}

json encode_embed_response(std::span<const Embedding> vectors) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  json list = json::array();
  for (const auto& v : vectors) list.push_back(v);
  return json{{"dim", dim}, {"vectors", list}};
}

std::vector<Embedding> decode_embed_response(const json& body,
                                             std::size_t expected_count) {
  const json& dim_v = field(body, "dim");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) {
    fail("dim must be a positive integer");
  }
  const auto dim = dim_v.get<std::size_t>();
  std::vector<Embedding> out;
  for (const auto& row : array_field(body, "vectors")) {
    if (!row.is_array() || row.size() != dim) fail("vector length != dim");
    Embedding v;
    v.reserve(dim);
    for (const auto& x : row) v.push_back(number(x, "vector component"));
    out.push_back(std::move(v));
  }
  if (out.size() != expected_count) fail("vector count mismatch");
  return out;
}

json encode_judge_request(std::span<const TextPair> pairs) {
  json list = json::array();
  for (const auto& p : pairs) {
    list.push_back(json{{"premise", p.premise}, {"hypothesis", p.hypothesis}});
  }
  return json{{"pairs", list}};
}

std::vector<TextPair> decode_judge_request(const json& body) {
  std::vector<TextPair> out;
  for (const auto& p : array_field(body, "pairs")) {
    out.push_back({string_value(field(p, "premise"), "premise"),
                   string_value(field(p, "hypothesis"), "hypothesis")});
  }
  return out;
}

json encode_judge_response(std::span<const PairJudgment> judgments) {
  json list = json::array();
  for (const auto& j : judgments) {
    list.push_back(json{{"p_entail", j.p_entail},
                        {"p_neutral", j.p_neutral},
                        {"p_contradict", j.p_contradict}});
  }
  return json{{"judgments", list}};
}

std::vector<PairJudgment> decode_judge_response(const json& body,
                                                std::span<const TextPair> pairs) {
  const json& list = array_field(body, "judgments");
  if (list.size() != pairs.size()) fail("judgment count mismatch");
  std::vector<PairJudgment> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& j = list[i];
    try {
      out.push_back(make_judgment(pairs[i].premise, pairs[i].hypothesis,
                                  number(field(j, "p_entail"), "p_entail"),
                                  number(field(j, "p_neutral"), "p_neutral"),
                                  number(field(j, "p_contradict"), "p_contradict")));
    } catch (const InvalidInput& e) {
      fail(e.what());
    }
  }
  return out;
}

json encode_tag_request(std::span<const std::string> texts) {
  return json{{"texts", std::vector<std::string>(texts.begin(), texts.end())}};
}

std::vector<std::string> decode_tag_request(const json& body) {
  return string_array(body, "texts");
}

json encode_tag_response(std::span<const std::vector<TokenTag>> tags) {
  json outer = json::array();
  for (const auto& sentence : tags) {
    json inner = json::array();
    for (const auto& t : sentence) {
      inner.push_back(json::array({t.token, std::string(to_string(t.tag))}));
    }
    outer.push_back(inner);
  }
  return json{{"tags", outer}};
}

std::vector<std::vector<TokenTag>> decode_tag_response(const json& body,
                                                       std::size_t expected_count) {
  std::vector<std::vector<TokenTag>> out;
  for (const auto& sentence : array_field(body, "tags")) {
    if (!sentence.is_array()) fail("tag list is not an array");
    std::vector<TokenTag> tags;
    for (const auto& pair : sentence) {
      if (!pair.is_array() || pair.size() != 2) fail("tag entry is not a pair");
      try {
        tags.push_back({string_value(pair[0], "token"),
                        parse_pos_tag(string_value(pair[1], "tag"))});
      } catch (const InvalidInput& e) {
        fail(e.what());
      }
    }
    out.push_back(std::move(tags));
  }
  if (out.size() != expected_count) fail("tag list count mismatch");
  return out;
}

}  // namespace proofsmith::wire
