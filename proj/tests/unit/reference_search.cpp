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


#include "reference_search.hpp"

#include <algorithm>
#include <map>

namespace proofsmith::testing {

namespace {

struct Row {
  std::string key;
  std::string text;
  GenerationMode mode;
  int parent;  // index into the depth-1 selection, -1 for the premise
  double sim;
  double parent_sim;
};

bool before(const Row& a, const Row& b) {
  if (a.sim != b.sim) return a.sim > b.sim;
  return a.key < b.key;
}

}  // namespace

RefSearch reference_search(const Oracle& oracle, const std::string& premise,
                           const std::string& hypothesis, int n, int top_proofs,
                           const std::vector<GenerationMode>& modes, int beam) {
  const Embedding h = embed(oracle, Sentence(hypothesis));
  std::map<std::string, double> memo;
  auto sim = [&](const std::string& text) {
    auto it = memo.find(text);
    if (it != memo.end()) return it->second;
    return memo[text] = cosine(embed(oracle, Sentence(text)), h);
  };
  const std::string p_key = Sentence(premise).key();
  const double p_sim = sim(premise);
  RefSearch out;

  // Depth 1: every generation from the premise, first occurrence per text.
  std::vector<Row> d1;
  for (auto mode : modes) {
    for (const auto& s : generate(oracle, mode, Sentence(premise), beam, beam)) {
      ++out.chains_enumerated;
      if (s.key() == p_key) continue;
      bool dup = false;
      for (const auto& r : d1) dup = dup || r.key == s.key();
      if (!dup) d1.push_back({s.key(), s.text(), mode, -1, sim(s.text()), p_sim});
    }
  }
  std::stable_sort(d1.begin(), d1.end(), before);
  if (d1.size() > static_cast<std::size_t>(n)) d1.resize(static_cast<std::size_t>(n));

  // Depth 2: every chain through a kept depth-1 sentence.
  std::vector<Row> raw;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    for (auto mode : modes) {
      for (const auto& s : generate(oracle, mode, Sentence(d1[i].text), beam, beam)) {
        ++out.chains_enumerated;
        if (s.key() == p_key || s.key() == d1[i].key) continue;
        raw.push_back({s.key(), s.text(), mode, static_cast<int>(i), sim(s.text()),
                       d1[i].sim});
      }
    }
  }
  // One row per text: the parent closest to H, earliest on ties.
  std::vector<Row> d2;
  for (const auto& r : raw) {
    auto it = std::find_if(d2.begin(), d2.end(), [&](const Row& x) { return x.key == r.key; });
    if (it == d2.end()) {
      d2.push_back(r);
    } else if (r.parent_sim > it->parent_sim) {
      *it = r;
    }
  }
  std::stable_sort(d2.begin(), d2.end(), before);
  if (d2.size() > static_cast<std::size_t>(n)) d2.resize(static_cast<std::size_t>(n));

  auto chain_of = [&](const Row& r) {
    RefChain c;
    if (r.parent >= 0) {
      c.texts.push_back(d1[static_cast<std::size_t>(r.parent)].text);
      c.modes.push_back(d1[static_cast<std::size_t>(r.parent)].mode);
    }
    c.texts.push_back(r.text);
    c.modes.push_back(r.mode);
    c.sim = r.sim;
    return c;
  };

  for (std::size_t i = 0; i < d2.size() && i < static_cast<std::size_t>(top_proofs); ++i) {
    out.level.push_back(chain_of(d2[i]));
  }

  std::vector<Row> pool = d1;
  for (const auto& r : d2) {
    bool shallower = false;
    for (const auto& x : d1) shallower = shallower || x.key == r.key;
    if (!shallower) pool.push_back(r);
  }
  std::stable_sort(pool.begin(), pool.end(), before);
  for (std::size_t i = 0; i < pool.size() && i < static_cast<std::size_t>(top_proofs) &&
                          i < static_cast<std::size_t>(n);
       ++i) {
    out.beam.push_back(chain_of(pool[i]));
  }
  return out;
}

}  // namespace proofsmith::testing
