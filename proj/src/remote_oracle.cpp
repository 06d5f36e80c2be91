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

#include "proofsmith/remote_oracle.hpp"

#include <httplib.h>

#include <cstdlib>
#include <thread>

#include "proofsmith/error.hpp"
#include "proofsmith/wire.hpp"

namespace proofsmith {

using wire::json;

std::string resolve_oracle_url(const std::optional<std::string>& explicit_url) {
  if (explicit_url && !explicit_url->empty()) return *explicit_url;
  if (const char* env = std::getenv(kOracleUrlEnv); env && *env) return env;
  throw InvalidInput(std::string("remote oracle needs --oracle-url or ") +
                     kOracleUrlEnv);
}

RemoteOracle::RemoteOracle(RemoteOptions options) : options_(std::move(options)) {
  if (options_.base_url.empty()) throw InvalidInput("remote oracle: empty URL");
  while (!options_.base_url.empty() && options_.base_url.back() == '/') {
    options_.base_url.pop_back();
  }
  if (options_.retries < 0) throw InvalidInput("remote oracle: negative retries");
}

std::string RemoteOracle::post(const char* path, const std::string& body) const {
  std::string last_error;
  auto backoff = options_.backoff;
  for (int attempt = 0; attempt <= options_.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client client(options_.base_url);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    const auto usecs =
        std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw ProtocolError(std::string(path) + ": HTTP " +
                          std::to_string(res->status) + ": " + res->body);
    }
    return res->body;
  }
  throw OracleUnavailable("oracle at " + options_.base_url + path +
                          " unavailable: " + last_error);
}

namespace {

json parse_body(const std::string& body, const char* path) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw ProtocolError(std::string(path) + ": malformed JSON reply: " + e.what());
  }
}

}  // namespace

std::vector<Candidate> RemoteOracle::generate_candidates(
    GenerationMode mode, std::span<const std::string> inputs, int beam,
    int num_return) const {
  wire::GenerateRequest request{mode, {inputs.begin(), inputs.end()}, beam, num_return};
  auto reply = post(wire::kGeneratePath, wire::encode(request).dump());
  return wire::decode_generate_response(parse_body(reply, wire::kGeneratePath));
}

std::vector<Embedding> RemoteOracle::embed_texts(
    std::span<const std::string> texts) const {
  auto reply = post(wire::kEmbedPath, wire::encode_embed_request(texts).dump());
  return wire::decode_embed_response(parse_body(reply, wire::kEmbedPath),
                                     texts.size());
}

std::vector<PairJudgment> RemoteOracle::judge_pairs(
    std::span<const TextPair> pairs) const {
  auto reply = post(wire::kJudgePath, wire::encode_judge_request(pairs).dump());
  return wire::decode_judge_response(parse_body(reply, wire::kJudgePath), pairs);
}

std::vector<std::vector<TokenTag>> RemoteOracle::tag_texts(
    std::span<const std::string> texts) const {
  std::string reply;
  try {
    reply = post(wire::kTagPath, wire::encode_tag_request(texts).dump());
  } catch (const ProtocolError& e) {
    // A sidecar without the optional endpoint answers 404.
    throw OracleUnavailable(std::string("tagger endpoint unavailable: ") + e.what());
  }
  return wire::decode_tag_response(parse_body(reply, wire::kTagPath), texts.size());
}

bool RemoteOracle::healthy() const {
  httplib::Client client(options_.base_url);
  client.set_connection_timeout(2, 0);
  auto res = client.Get(wire::kHealthPath);
  if (!res || res->status != 200) return false;
  try {
    return json::parse(res->body).value("status", "") == "ready";
  } catch (const json::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// OracleServer

struct OracleServer::Impl {
  const Oracle& oracle;
  httplib::Server server;
  std::thread thread;
  std::string host;
  int port = 0;

  explicit Impl(const Oracle& o) : oracle(o) {}
};

namespace {

template <typename Handler>
void handle_json(const httplib::Request& req, httplib::Response& res,
                 Handler&& handler) {
  try {
    const json body = json::parse(req.body);
    res.set_content(handler(body).dump(), "application/json");
  } catch (const json::exception& e) {
    res.status = 400;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const ProtocolError& e) {
    res.status = 400;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const InvalidInput& e) {
    res.status = 400;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const OracleUnavailable& e) {
    res.status = 404;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(json{{"error", e.what()}}.dump(), "application/json");
  }
}

}  // namespace

OracleServer::OracleServer(const Oracle& oracle)
    : impl_(std::make_unique<Impl>(oracle)) {
  auto& s = impl_->server;
  const Oracle& o = impl_->oracle;
  s.Get(wire::kHealthPath, [&o](const httplib::Request&, httplib::Response& res) {
    json roles{{"generator", "ready"}, {"composer", "ready"},
               {"embedder", "ready"},  {"judge", "ready"}};
    res.set_content(json{{"status", "ready"}, {"roles", roles}, {"id", o.id()}}.dump(),
                    "application/json");
  });
  s.Post(wire::kGeneratePath, [&o](const httplib::Request& req, httplib::Response& res) {
    handle_json(req, res, [&](const json& body) {
      auto r = wire::decode_generate_request(body);
      auto c = o.generate_candidates(r.mode, r.inputs, r.beam, r.num_return);
      return wire::encode_generate_response(c);
    });
  });
  s.Post(wire::kEmbedPath, [&o](const httplib::Request& req, httplib::Response& res) {
    handle_json(req, res, [&](const json& body) {
      auto v = o.embed_texts(wire::decode_embed_request(body));
      return wire::encode_embed_response(v);
    });
  });
  s.Post(wire::kJudgePath, [&o](const httplib::Request& req, httplib::Response& res) {
    handle_json(req, res, [&](const json& body) {
      auto j = o.judge_pairs(wire::decode_judge_request(body));
      return wire::encode_judge_response(j);
    });
  });
  s.Post(wire::kTagPath, [&o](const httplib::Request& req, httplib::Response& res) {
    handle_json(req, res, [&](const json& body) {
      auto t = o.tag_texts(wire::decode_tag_request(body));
      return wire::encode_tag_response(t);
    });
  });
}

OracleServer::~OracleServer() { stop(); }

int OracleServer::start(const std::string& host, int port) {
  auto& impl = *impl_;
  impl.host = host;
  impl.port = port == 0 ? impl.server.bind_to_any_port(host)
                        : (impl.server.bind_to_port(host, port) ? port : -1);
  if (impl.port < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  impl.thread = std::thread([&impl] { impl.server.listen_after_bind(); });
  impl.server.wait_until_ready();
  return impl.port;
}

void OracleServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string OracleServer::url() const {
  return "http://" + impl_->host + ":" + std::to_string(impl_->port);
}

}  // namespace proofsmith
