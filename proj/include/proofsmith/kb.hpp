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


// Knowledge-base facts, the exact cosine index over them, and the two
// keyword retrieval strategies.
//
// Fact files are UTF-8, one fact per line; '#' lines and blank lines are
// skipped. A line with exactly two tabs is read as `kb_id<TAB>source<TAB>
// text`; any other line is a bare sentence whose id is `<stem>:<line>` and
// whose source is guessed from the file name ("omcs", "generics"). Facts
// are deduplicated on normalized text, first occurrence wins.
//
// Index cache layout (little endian):
//   "PSKBIDX1"  u32 version  u32 key_len  key bytes  u64 rows  u64 dim
//   rows * dim f64
// where key = digest of the fact files plus the embedder id.

#ifndef PROOFSMITH_KB_HPP_
#define PROOFSMITH_KB_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proofsmith/oracle.hpp"

namespace proofsmith {

enum class FactSource { kOmcs, kGenericsKb, kOther };

std::string_view to_string(FactSource source);  // "OMCS", "GenericsKB", "other"
FactSource parse_fact_source(std::string_view name);

struct Fact {
  std::string text;
  FactSource source = FactSource::kOther;
  std::string kb_id;
  double score = 0.0;  // cosine to the query
  int rank = 0;        // 1-based within one retrieval
};

// Parses fact files without embedding them. Throws IoError, InvalidInput
// (malformed TSV, duplicate kb_id) or EmptyKb.
std::vector<Fact> load_facts(std::span<const std::string> files);

inline constexpr std::uint32_t kIndexCacheVersion = 1;

class KBIndex {
 public:
  // Embeds every fact. With a cache path, a cache whose key matches is
  // reused and a stale or missing one is (re)written.
  static KBIndex build(std::span<const std::string> files, const Oracle& embedder,
                       const std::optional<std::string>& cache_path = std::nullopt);
  static KBIndex from_facts(std::vector<Fact> facts, const Oracle& embedder);

  std::size_t size() const { return facts_.size(); }
  std::size_t dim() const { return dim_; }
  const Fact& fact(std::size_t i) const { return facts_[i]; }
  const std::vector<Fact>& facts() const { return facts_; }
  std::span<const double> row(std::size_t i) const {
    return {embeddings_.data() + i * dim_, dim_};
  }
  const std::string& embedder_id() const { return embedder_id_; }
  bool loaded_from_cache() const { return from_cache_; }

 private:
  KBIndex() = default;

  std::vector<Fact> facts_;
  std::vector<double> embeddings_;  // row-major, unit rows
  std::size_t dim_ = 0;
  std::string embedder_id_;
  bool from_cache_ = false;
};

std::string index_cache_key(std::span<const std::string> files, const Oracle& embedder);

// Nouns of each sentence, in order, first occurrence only.
std::pair<Tokens, Tokens> extract_keywords(const Sentence& premise,
                                           const Sentence& hypothesis,
                                           const Tagger& tagger);

using KeywordGroups = std::vector<Tokens>;
inline constexpr double kDefaultClusterThreshold = 0.45;

// Greedy: each token joins the first group whose centroid has cosine >= tau
// with it, else opens a new group. Repeated tokens are considered once.
KeywordGroups cluster_keywords(std::span<const std::string> tokens, const Oracle& embedder,
                               double tau = kDefaultClusterThreshold);

inline constexpr int kDefaultFactTopK = 8;

// Exact top-k by cosine; ties go to the smaller kb_id.
std::vector<Fact> retrieve(const KBIndex& index, const std::string& query, int k,
                           const Oracle& embedder);

struct PairRetrieval {
  Tokens premise_keywords;
  Tokens hypothesis_keywords;
  KeywordGroups groups;
  std::vector<std::string> queries;  // strategy A first, then one per group
  bool used_fallback = false;        // no keywords: queried with the premise
  std::vector<Fact> facts;
};

// Keyword query plus one query per keyword cluster, each taking its top-k;
// merged by max score per fact, re-ranked and cut to k.
PairRetrieval retrieve_for_pair(const KBIndex& index, const Sentence& premise,
                                const Sentence& hypothesis, int k, const Oracle& embedder,
                                const Tagger& tagger,
                                double tau = kDefaultClusterThreshold);

}  // namespace proofsmith

#endif  // PROOFSMITH_KB_HPP_
