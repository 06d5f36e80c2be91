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


#include "proofsmith/proof.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

using nlohmann::json;

std::string_view to_string(StepKind kind) {
  return kind == StepKind::kInferred ? "inferred" : "fact";
}

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::kLevel: return "level";
    case SearchMethod::kBeam: return "beam";
    case SearchMethod::kFacts: return "facts";
    case SearchMethod::kNone: return "none";
    case SearchMethod::kGold: return "gold";
  }
  return "none";
}

SearchMethod parse_search_method(std::string_view name) {
  for (auto m : {SearchMethod::kLevel, SearchMethod::kBeam, SearchMethod::kFacts,
                 SearchMethod::kNone, SearchMethod::kGold}) {
    if (to_string(m) == name) return m;
  }
  throw InvalidInput("unknown search method: " + std::string(name));
}

ProofStep ProofStep::inferred(int j, Sentence s, GenerationMode mode, std::vector<int> refs) {
  return ProofStep{j, StepKind::kInferred, std::move(s), mode, std::move(refs), "", 0, {}, {}};
}

ProofStep ProofStep::fact(int j, Sentence s, std::string kb_id, int rank) {
  return ProofStep{j, StepKind::kFact, std::move(s), std::nullopt, {}, std::move(kb_id),
                   rank, {}, {}};
}

int Proof::num_inferred() const {
  int n = 0;
  for (const auto& s : steps) n += s.kind == StepKind::kInferred;
  return n;
}

ProofStep& Proof::add_inferred(Sentence s, GenerationMode mode, std::vector<int> refs) {
  steps.push_back(ProofStep::inferred(static_cast<int>(steps.size()) + 1, std::move(s),
                                      mode, std::move(refs)));
  return steps.back();
}

ProofStep& Proof::add_fact(Sentence s, std::string kb_id, int rank) {
  steps.push_back(ProofStep::fact(static_cast<int>(steps.size()) + 1, std::move(s),
                                  std::move(kb_id), rank));
  return steps.back();
}

std::vector<std::string> proof_violations(const Proof& proof) {
  std::vector<std::string> out;
  const int m = static_cast<int>(proof.steps.size());
  // rooted[j]: step j depends, transitively, on the premise.
  std::vector<bool> rooted(static_cast<std::size_t>(m) + 1, false);
  rooted[0] = true;
  for (int i = 0; i < m; ++i) {
    const ProofStep& s = proof.steps[static_cast<std::size_t>(i)];
    const std::string at = "step " + std::to_string(i + 1);
    if (s.j != i + 1) out.push_back(at + ": index " + std::to_string(s.j) + " breaks 1..m");
    if (s.kind == StepKind::kFact) {
      if (s.mode) out.push_back(at + ": fact step carries a generation mode");
      if (!s.refs.empty()) out.push_back(at + ": fact step has references");
      if (s.kb_id.empty()) out.push_back(at + ": fact step without kb_id");
      if (s.fact_rank < 1) out.push_back(at + ": fact rank must be >= 1");
      continue;
    }
    if (!s.mode) out.push_back(at + ": inferred step without a generation mode");
    if (s.refs.empty()) out.push_back(at + ": inferred step without references");
    bool any_rooted = false;
    for (int r : s.refs) {
      if (r < 0 || r >= i + 1) {
        out.push_back(at + ": reference " + std::to_string(r) + " does not precede it");
        continue;
      }
      any_rooted = any_rooted || rooted[static_cast<std::size_t>(r)];
    }
    if (!any_rooted && !s.refs.empty()) out.push_back(at + ": not derived from the premise");
    rooted[static_cast<std::size_t>(i) + 1] = any_rooted;
  }
  return out;
}

void validate(const Proof& proof) {
  auto v = proof_violations(proof);
  if (v.empty()) return;
  std::string msg = "invalid proof " + proof.id + ":";
  for (const auto& e : v) msg += " " + e + ";";
  throw InvalidInput(msg);
}

json to_json(const Proof& proof) {
  json steps = json::array();
  for (const auto& s : proof.steps) {
    json prov;
    if (s.kind == StepKind::kInferred) {
      prov = {{"mode", s.mode ? std::string(mode_name(*s.mode)) : ""}, {"refs", s.refs}};
    } else {
      prov = {{"kb_id", s.kb_id}, {"rank", s.fact_rank}};
    }
    json step{{"j", s.j},
              {"kind", std::string(to_string(s.kind))},
              {"text", s.sentence.text()},
              {"provenance", prov}};
    if (s.sim) step["sim"] = *s.sim;
    if (!s.flags.empty()) step["flags"] = s.flags;
    steps.push_back(std::move(step));
  }
  return json{{"id", proof.id},
              {"premise", proof.premise.text()},
              {"hypothesis", proof.hypothesis.text()},
              {"label", std::string(to_string(proof.label))},
              {"search_method", std::string(to_string(proof.search_method))},
              {"config", proof.config},
              {"steps", steps},
              {"warnings", proof.warnings},
              {"meta", proof.meta}};
}

namespace {

const json& need(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(std::string("proof record: missing '") + key + "'");
  }
  return obj.at(key);
}

}  // namespace

Proof proof_from_json(const json& r) {
  try {
    Proof p(need(r, "id").get<std::string>(), Sentence(need(r, "premise").get<std::string>()),
            Sentence(need(r, "hypothesis").get<std::string>()));
    p.label = parse_label(need(r, "label").get<std::string>());
    p.search_method = parse_search_method(need(r, "search_method").get<std::string>());
    p.config = r.value("config", json::object());
    p.meta = r.value("meta", json::object());
    p.warnings = r.value("warnings", std::vector<std::string>{});
    for (const auto& s : need(r, "steps")) {
      const int j = need(s, "j").get<int>();
      const std::string kind = need(s, "kind").get<std::string>();
      Sentence text(need(s, "text").get<std::string>());
      const json& prov = need(s, "provenance");
      ProofStep step =
          kind == "inferred"
              ? ProofStep::inferred(j, std::move(text),
                                    parse_mode(need(prov, "mode").get<std::string>()),
                                    need(prov, "refs").get<std::vector<int>>())
          : kind == "fact"
              ? ProofStep::fact(j, std::move(text), need(prov, "kb_id").get<std::string>(),
                                need(prov, "rank").get<int>())
              : throw InvalidInput("proof record: unknown step kind " + kind);
      if (s.contains("sim")) step.sim = s.at("sim").get<double>();
      step.flags = s.value("flags", std::vector<std::string>{});
      p.steps.push_back(std::move(step));
    }
    return p;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("proof record: ") + e.what());
  }
}

std::string serialize(const Proof& proof) { return to_json(proof).dump(); }

Proof parse_proof(std::string_view line) {
  json r;
  try {
    r = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("proof record is not JSON: ") + e.what());
  }
  return proof_from_json(r);
}

void write_proofs(const std::string& path, const std::vector<Proof>& proofs) {
  std::string out;
  for (const auto& p : proofs) out += serialize(p) + "\n";
  write_file(path, out);
}

std::vector<Proof> read_proofs(const std::string& path) {
  std::vector<Proof> out;
  const auto lines = split(read_file(path), '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      out.push_back(parse_proof(lines[i]));
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<PairRecord> parse_pairs(std::string_view tsv, const std::string& origin) {
  std::vector<PairRecord> out;
  std::set<std::string> ids;
  const auto lines = split(tsv, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || line.front() == '#') continue;
    const std::string at = origin + ":" + std::to_string(i + 1) + ": ";
    const auto cols = split(line, '\t');
    if (cols.size() != 4) {
      throw InvalidInput(at + "expected 4 tab-separated columns, got " +
                         std::to_string(cols.size()));
    }
    try {
      PairRecord r{std::string(trim(cols[0])), Sentence(cols[1]), Sentence(cols[2]),
                   parse_label(trim(cols[3]))};
      if (r.id.empty()) throw InvalidInput("empty id");
      if (!ids.insert(r.id).second) throw InvalidInput("duplicate id " + r.id);
      out.push_back(std::move(r));
    } catch (const InvalidInput& e) {
      throw InvalidInput(at + e.what());
    }
  }
  return out;
}

std::vector<PairRecord> read_pairs(const std::string& path) {
  return parse_pairs(read_file(path), path);
}

}  // namespace proofsmith
