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

// JSON bodies of the model-sidecar protocol. Field names and shapes are
// normative:
//
//   POST /v1/generate {"mode","inputs":[..],"beam","num_return"}
//                  -> {"candidates":[{"text","score"}]}
//   POST /v1/embed    {"texts":[..]} -> {"dim","vectors":[[..]]}
//   POST /v1/judge    {"pairs":[{"premise","hypothesis"}]}
//                  -> {"judgments":[{"p_entail","p_neutral","p_contradict"}]}
//   POST /v1/tag      {"texts":[..]} -> {"tags":[[[token, tag], ..]]}
//   GET  /health   -> {"status":"ready"|"not-ready", "roles":{..}}
//
// Responses may carry extra fields (e.g. "metadata"); they are ignored.
// Decoders throw ProtocolError on any shape violation.

#ifndef PROOFSMITH_WIRE_HPP_
#define PROOFSMITH_WIRE_HPP_

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "proofsmith/oracle.hpp"

namespace proofsmith::wire {

using nlohmann::json;

inline constexpr const char* kGeneratePath = "/v1/generate";
inline constexpr const char* kEmbedPath = "/v1/embed";
inline constexpr const char* kJudgePath = "/v1/judge";
inline constexpr const char* kTagPath = "/v1/tag";
inline constexpr const char* kHealthPath = "/health";

struct GenerateRequest {
  GenerationMode mode = GenerationMode::kEntail;
  std::vector<std::string> inputs;
  int beam = kDefaultBeam;
  int num_return = kDefaultBeam;
};

json encode(const GenerateRequest& request);
GenerateRequest decode_generate_request(const json& body);
json encode_generate_response(std::span<const Candidate> candidates);
std::vector<Candidate> decode_generate_response(const json& body);

json encode_embed_request(std::span<const std::string> texts);
std::vector<std::string> decode_embed_request(const json& body);
json encode_embed_response(std::span<const Embedding> vectors);
std::vector<Embedding> decode_embed_response(const json& body,
                                             std::size_t expected_count);

json encode_judge_request(std::span<const TextPair> pairs);
std::vector<TextPair> decode_judge_request(const json& body);
json encode_judge_response(std::span<const PairJudgment> judgments);
// Pairs are echoed back into the returned judgments; labels are recomputed.
std::vector<PairJudgment> decode_judge_response(const json& body,
                                                std::span<const TextPair> pairs);

json encode_tag_request(std::span<const std::string> texts);
std::vector<std::string> decode_tag_request(const json& body);
json encode_tag_response(std::span<const std::vector<TokenTag>> tags);
std::vector<std::vector<TokenTag>> decode_tag_response(const json& body,
                                                       std::size_t expected_count);

}  // namespace proofsmith::wire

#endif  // PROOFSMITH_WIRE_HPP_
