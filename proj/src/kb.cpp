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


#include "proofsmith/kb.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <filesystem>
#include <map>
#include <set>
#include <unordered_set>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

namespace {

constexpr char kCacheMagic[8] = {'P', 'S', 'K', 'B', 'I', 'D', 'X', '1'};
constexpr std::size_t kEmbedBatch = 64;

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

FactSource guess_source(const std::filesystem::path& path) {
  const std::string name = lower(path.filename().string());
  if (name.find("omcs") != std::string::npos) return FactSource::kOmcs;
  if (name.find("generics") != std::string::npos) return FactSource::kGenericsKb;
  return FactSource::kOther;
}

std::string line_id(const std::filesystem::path& path, std::size_t line_no) {
  char num[16];
  std::snprintf(num, sizeof(num), "%08zu", line_no);
  return path.stem().string() + ":" + num;
}

template <typename T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

template <typename T>
bool get(std::string_view& in, T& value) {
  if (in.size() < sizeof(T)) return false;
  std::memcpy(&value, in.data(), sizeof(T));
  in.remove_prefix(sizeof(T));
  return true;
}

bool fact_before(const Fact& a, const Fact& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.kb_id < b.kb_id;
}

void assign_ranks(std::vector<Fact>& facts) {
  for (std::size_t i = 0; i < facts.size(); ++i) facts[i].rank = static_cast<int>(i) + 1;
}

}  // namespace

std::string_view to_string(FactSource source) {
  switch (source) {
    case FactSource::kOmcs: return "OMCS";
    case FactSource::kGenericsKb: return "GenericsKB";
    case FactSource::kOther: return "other";
  }
  return "other";
}

FactSource parse_fact_source(std::string_view name) {
  const std::string n = lower(name);
  if (n == "omcs") return FactSource::kOmcs;
  if (n == "genericskb") return FactSource::kGenericsKb;
  if (n == "other") return FactSource::kOther;
  throw InvalidInput("unknown fact source: " + std::string(name));
}

std::vector<Fact> load_facts(std::span<const std::string> files) {
  std::vector<Fact> facts;
  std::unordered_set<std::string> seen_text;
  std::unordered_set<std::string> seen_id;
  for (const auto& file : files) {
    const std::filesystem::path path(file);
    const std::string contents = read_file(file);
    const auto lines = split(contents, '\n');
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string_view line = trim(lines[i]);
      if (line.empty() || line.front() == '#') continue;
      Fact f;
      auto fields = split(line, '\t');
      if (fields.size() == 3) {
        f.kb_id = std::string(trim(fields[0]));
        f.source = parse_fact_source(trim(fields[1]));
        f.text = std::string(trim(fields[2]));
        if (f.kb_id.empty()) {
          throw InvalidInput(file + ":" + std::to_string(i + 1) + ": empty kb_id");
        }
      } else if (fields.size() == 1) {
        f.kb_id = line_id(path, i + 1);
        f.source = guess_source(path);
        f.text = std::string(line);
      } else {
        throw InvalidInput(file + ":" + std::to_string(i + 1) +
                           ": expected 1 or 3 tab-separated fields");
      }
      std::string key;
      try {
        key = Sentence(f.text).key();
      } catch (const InvalidInput&) {
        continue;  // punctuation only
      }
      if (!seen_text.insert(key).second) continue;
      if (!seen_id.insert(f.kb_id).second) {
        throw InvalidInput("duplicate kb_id " + f.kb_id + " in " + file);
      }
      facts.push_back(std::move(f));
    }
  }
  if (facts.empty()) throw EmptyKb("knowledge base has no facts");
  return facts;
}

std::string index_cache_key(std::span<const std::string> files, const Oracle& embedder) {
  std::string key;
  for (const auto& f : files) key += file_digest(f) + ";";
  return key + embedder.id();
}

KBIndex KBIndex::from_facts(std::vector<Fact> facts, const Oracle& embedder) {
  if (facts.empty()) throw EmptyKb("knowledge base has no facts");
  KBIndex index;
  index.embedder_id_ = embedder.id();
  for (std::size_t start = 0; start < facts.size(); start += kEmbedBatch) {
    const std::size_t end = std::min(facts.size(), start + kEmbedBatch);
    std::vector<Sentence> batch;
    for (std::size_t i = start; i < end; ++i) batch.emplace_back(facts[i].text);
    for (auto& v : embed(embedder, batch)) {
      if (index.dim_ == 0) index.dim_ = v.size();
      if (v.size() != index.dim_) throw ProtocolError("kb: embedding dimension changed");
      index.embeddings_.insert(index.embeddings_.end(), v.begin(), v.end());
    }
  }
  index.facts_ = std::move(facts);
  return index;
}

KBIndex KBIndex::build(std::span<const std::string> files, const Oracle& embedder,
                       const std::optional<std::string>& cache_path) {
  auto facts = load_facts(files);
  if (!cache_path) return from_facts(std::move(facts), embedder);

  const std::string key = index_cache_key(files, embedder);
  if (std::filesystem::exists(*cache_path)) {
    const std::string blob = read_file(*cache_path);
    std::string_view in(blob);
    std::uint32_t version = 0, key_len = 0;
    std::uint64_t rows = 0, dim = 0;
    bool ok = in.size() >= 8 && std::memcmp(in.data(), kCacheMagic, 8) == 0;
    if (ok) in.remove_prefix(8);
    ok = ok && get(in, version) && version == kIndexCacheVersion && get(in, key_len) &&
         in.size() >= key_len && in.substr(0, key_len) == key;
    if (ok) in.remove_prefix(key_len);
    ok = ok && get(in, rows) && get(in, dim) && rows == facts.size() && dim > 0 &&
         in.size() == rows * dim * sizeof(double);
    if (ok) {
      KBIndex index;
      index.facts_ = std::move(facts);
      index.dim_ = dim;
      index.embedder_id_ = embedder.id();
      index.embeddings_.resize(rows * dim);
      std::memcpy(index.embeddings_.data(), in.data(), in.size());
      index.from_cache_ = true;
      return index;
    }
  }
  KBIndex index = from_facts(std::move(facts), embedder);
  std::string out(kCacheMagic, 8);
  put(out, kIndexCacheVersion);
  put(out, static_cast<std::uint32_t>(key.size()));
  out += key;
  put(out, static_cast<std::uint64_t>(index.size()));
  put(out, static_cast<std::uint64_t>(index.dim_));
  out.append(reinterpret_cast<const char*>(index.embeddings_.data()),
             index.embeddings_.size() * sizeof(double));
  write_file(*cache_path, out);
  return index;
}

std::pair<Tokens, Tokens> extract_keywords(const Sentence& premise,
                                           const Sentence& hypothesis,
                                           const Tagger& tagger) {
  auto nouns = [&tagger](const Sentence& s) {
    Tokens out;
    for (const auto& t : tagger.tag(s)) {
      if (t.tag != PosTag::kNoun) continue;
      if (std::find(out.begin(), out.end(), t.token) == out.end()) out.push_back(t.token);
    }
    return out;
  };
  return {nouns(premise), nouns(hypothesis)};
}

KeywordGroups cluster_keywords(std::span<const std::string> tokens, const Oracle& embedder,
                               double tau) {
  if (tokens.empty()) throw InvalidInput("cluster_keywords: no tokens");
  Tokens unique;
  for (const auto& t : tokens) {
    if (std::find(unique.begin(), unique.end(), t) == unique.end()) unique.push_back(t);
  }
  std::vector<Sentence> words;
  for (const auto& t : unique) words.emplace_back(t);
  const auto vectors = embed(embedder, words);

  KeywordGroups groups;
  std::vector<Embedding> sums;  // centroid direction = sum of members
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g) {
      bool zero = std::all_of(sums[g].begin(), sums[g].end(), [](double x) { return x == 0; });
      if (!zero && cosine(sums[g], vectors[i]) >= tau) {
        groups[g].push_back(unique[i]);
        for (std::size_t d = 0; d < sums[g].size(); ++d) sums[g][d] += vectors[i][d];
        placed = true;
      }
    }
    if (!placed) {
      groups.push_back({unique[i]});
      sums.push_back(vectors[i]);
    }
  }
  return groups;
}

std::vector<Fact> retrieve(const KBIndex& index, const std::string& query, int k,
                           const Oracle& embedder) {
  if (k < 1) throw InvalidInput("retrieve: k must be positive");
  if (index.size() == 0) throw EmptyKb("retrieve: empty index");
  const Embedding q = embed(embedder, Sentence(query));
  if (q.size() != index.dim()) {
    throw InvalidInput("retrieve: query dimension differs from the index");
  }
  std::vector<Fact> scored = index.facts();
  for (std::size_t i = 0; i < scored.size(); ++i) {
    const auto row = index.row(i);
    double dot = 0.0;
    for (std::size_t d = 0; d < row.size(); ++d) dot += row[d] * q[d];
    scored[i].score = std::clamp(dot, -1.0, 1.0);
  }
  const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(k), scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                    scored.end(), fact_before);
  scored.resize(keep);
  assign_ranks(scored);
  return scored;
}

PairRetrieval retrieve_for_pair(const KBIndex& index, const Sentence& premise,
                                const Sentence& hypothesis, int k, const Oracle& embedder,
                                const Tagger& tagger, double tau) {
  if (k < 1) throw InvalidInput("retrieve_for_pair: k must be positive");
  PairRetrieval out;
  std::tie(out.premise_keywords, out.hypothesis_keywords) =
      extract_keywords(premise, hypothesis, tagger);
  Tokens all = out.premise_keywords;
  all.insert(all.end(), out.hypothesis_keywords.begin(), out.hypothesis_keywords.end());

  if (all.empty()) {
    out.used_fallback = true;
    out.queries.push_back(premise.text());
    out.facts = retrieve(index, premise.text(), k, embedder);
    return out;
  }
  out.queries.push_back(join_tokens(all));
  out.groups = cluster_keywords(all, embedder, tau);
  for (const auto& g : out.groups) out.queries.push_back(join_tokens(g));

  std::map<std::string, Fact> best;  // by kb_id
  for (const auto& q : out.queries) {
    for (auto& f : retrieve(index, q, k, embedder)) {
      auto [it, inserted] = best.try_emplace(f.kb_id, f);
      if (!inserted && f.score > it->second.score) it->second = f;
    }
  }
  for (auto& [id, f] : best) out.facts.push_back(std::move(f));
  std::sort(out.facts.begin(), out.facts.end(), fact_before);
  if (out.facts.size() > static_cast<std::size_t>(k)) out.facts.resize(k);
  assign_ranks(out.facts);
  return out;
}

}  // namespace proofsmith
