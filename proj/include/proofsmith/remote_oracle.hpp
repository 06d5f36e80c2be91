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

#ifndef PROOFSMITH_REMOTE_ORACLE_HPP_
#define PROOFSMITH_REMOTE_ORACLE_HPP_

#include <chrono>
#include <memory>
#include <optional>
#include <string>

#include "proofsmith/oracle.hpp"

namespace proofsmith {

inline constexpr const char* kOracleUrlEnv = "PROOFSMITH_ORACLE_URL";

// The explicit URL if given, else $PROOFSMITH_ORACLE_URL. Throws
// InvalidInput when neither is set.
std::string resolve_oracle_url(const std::optional<std::string>& explicit_url);

struct RemoteOptions {
  std::string base_url;  // e.g. "http://127.0.0.1:8080"
  std::chrono::milliseconds timeout{30000};
  int retries = 1;
  std::chrono::milliseconds backoff{200};  // doubled per retry
};

// HTTP/JSON client for the model sidecar. Stateless between calls; each
// request opens its own connection, so one instance may be shared across
// threads.
class RemoteOracle : public Oracle {
 public:
  explicit RemoteOracle(RemoteOptions options);

  std::string id() const override { return "remote:" + options_.base_url; }
  std::vector<Candidate> generate_candidates(
      GenerationMode mode, std::span<const std::string> inputs, int beam,
      int num_return) const override;
  std::vector<Embedding> embed_texts(
      std::span<const std::string> texts) const override;
  std::vector<PairJudgment> judge_pairs(
      std::span<const TextPair> pairs) const override;
  std::vector<std::vector<TokenTag>> tag_texts(
      std::span<const std::string> texts) const override;

  // True when GET /health answers {"status":"ready"}.
  bool healthy() const;

 private:
  RemoteOptions options_;

  std::string post(const char* path, const std::string& body) const;
};

// Serves any Oracle over the sidecar protocol on a background thread. Used
// to exercise the client end to end against the mock.
class OracleServer {
 public:
  explicit OracleServer(const Oracle& oracle);
  ~OracleServer();
  OracleServer(const OracleServer&) = delete;
  OracleServer& operator=(const OracleServer&) = delete;

  // Binds (port 0 picks a free one) and starts serving; returns the port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  void stop();
  std::string url() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace proofsmith

#endif  // PROOFSMITH_REMOTE_ORACLE_HPP_
