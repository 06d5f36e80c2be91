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


#include "proofsmith/augment.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

using nlohmann::json;

NliLabel label_for_mode(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::kEntail:
    case GenerationMode::kMonotonic:
      return NliLabel::kEntailment;
    case GenerationMode::kContradict:
      return NliLabel::kContradiction;
    case GenerationMode::kNeutral:
      return NliLabel::kNeutral;
    default:
      throw InvalidInput("mode " + std::string(mode_name(mode)) + " has no augment label");
  }
}

bool is_augment_mode(GenerationMode mode) {
  return mode == GenerationMode::kEntail || mode == GenerationMode::kContradict ||
         mode == GenerationMode::kNeutral || mode == GenerationMode::kMonotonic;
}

json AugmentExample::to_json() const {
  return json{{"premise", premise},
              {"hypothesis", hypothesis},
              {"label", std::string(proofsmith::to_string(label))},
              {"mode", std::string(mode_name(provenance_mode))},
              {"source_premise_id", source_premise_id}};
}

AugmentExample AugmentExample::from_json(const json& j) {
  try {
    AugmentExample e{j.at("premise").get<std::string>(), j.at("hypothesis").get<std::string>(),
                     parse_label(j.at("label").get<std::string>()),
                     parse_mode(j.at("mode").get<std::string>()),
                     j.at("source_premise_id").get<std::string>()};
    if (e.label != label_for_mode(e.provenance_mode)) {
      throw InvalidInput("augment record: label " + std::string(proofsmith::to_string(e.label)) +
                         " does not match mode " + std::string(mode_name(e.provenance_mode)));
    }
    return e;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("augment record: ") + e.what());
  }
}

namespace {

std::string pair_key(std::string_view premise, std::string_view hypothesis) {
  return normalized_key(premise) + '\t' + normalized_key(hypothesis);
}

struct PremiseOutput {
  std::vector<AugmentExample> examples;
  std::optional<std::string> warning;
};

PremiseOutput augment_one(const SourcePremise& p, const std::vector<GenerationMode>& modes,
                          int per_premise, const Oracle& oracle, int beam) {
  PremiseOutput out;
  try {
    for (auto mode : modes) {
      for (auto& s : generate(oracle, mode, p.text, per_premise, beam)) {
        out.examples.push_back({p.text.text(), s.text(), label_for_mode(mode), mode, p.id});
      }
    }
  } catch (const Error& e) {
    out.examples.clear();
    out.warning = "premise " + p.id + " skipped: " + e.what();
  }
  return out;
}

}  // namespace

AugmentResult generate_augment_set(const std::vector<SourcePremise>& premises,
                                   const std::vector<GenerationMode>& modes, int per_premise,
                                   const Oracle& oracle, int jobs, int beam) {
  if (per_premise < 1) throw InvalidInput("augment: per_premise must be >= 1");
  if (jobs < 1) throw InvalidInput("augment: jobs must be >= 1");
  if (modes.empty()) throw InvalidInput("augment: no modes");
  for (auto m : modes) label_for_mode(m);

  std::vector<PremiseOutput> outputs(premises.size());
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), premises.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < premises.size(); ++i) {
      outputs[i] = augment_one(premises[i], modes, per_premise, oracle, beam);
    }
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < premises.size(); i += workers) {
          outputs[i] = augment_one(premises[i], modes, per_premise, oracle, beam);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  AugmentResult result;
  std::set<std::string> seen;
  for (auto& o : outputs) {
    if (o.warning) result.warnings.push_back(*o.warning);
    for (auto& e : o.examples) {
      if (seen.insert(pair_key(e.premise, e.hypothesis)).second) {
        result.examples.push_back(std::move(e));
      }
    }
  }
  return result;
}

void write_augment(const std::string& path, const std::vector<AugmentExample>& examples) {
  std::string out;
  for (const auto& e : examples) out += e.to_json().dump() + "\n";
  write_file(path, out);
}

std::vector<AugmentExample> read_augment(const std::string& path) {
  std::vector<AugmentExample> out;
  const auto lines = split(read_file(path), '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      out.push_back(AugmentExample::from_json(json::parse(lines[i])));
    } catch (const json::exception& e) {
      throw InvalidInput(path + ":" + std::to_string(i + 1) + ": " + e.what());
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<LabeledPair> parse_labeled_pairs(std::string_view tsv, const std::string& origin) {
  std::vector<LabeledPair> out;
  const auto lines = split(tsv, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    const auto cols = split(line, '\t');
    const std::string at = origin + ":" + std::to_string(i + 1) + ": ";
    if (cols.size() != 3) {
      throw InvalidInput(at + "expected 3 tab-separated columns, got " +
                         std::to_string(cols.size()));
    }
    if (trim(cols[0]).empty() || trim(cols[1]).empty()) throw InvalidInput(at + "empty sentence");
    try {
      out.push_back({cols[0], cols[1], parse_label(trim(cols[2])), "base"});
    } catch (const InvalidInput& e) {
      throw InvalidInput(at + e.what());
    }
  }
  return out;
}

std::vector<LabeledPair> read_labeled_pairs(const std::string& path) {
  return parse_labeled_pairs(read_file(path), path);
}

void write_labeled_pairs(const std::string& path, const std::vector<LabeledPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) {
    if (p.premise.find_first_of("\t\n") != std::string::npos ||
        p.hypothesis.find_first_of("\t\n") != std::string::npos) {
      throw InvalidInput("pair text contains a tab or newline");
    }
    out += p.premise + '\t' + p.hypothesis + '\t' + std::string(to_string(p.label)) + '\n';
  }
  write_file(path, out);
}

namespace {

// Streams of the export seed, kept apart so one draw cannot shift another.
constexpr std::uint64_t kBaseStream = 1;
constexpr std::uint64_t kPoolStream = 2;
constexpr std::uint64_t kShuffleStream = 3;

std::size_t fraction_count(double fraction, std::size_t n) {
  // The epsilon keeps 0.07 * 100 from flooring to 6.
  return static_cast<std::size_t>(fraction * static_cast<double>(n) + 1e-9);
}

}  // namespace

ExportResult export_dataset(const std::vector<LabeledPair>& base,
                            const std::vector<AugmentExample>& augment,
                            const ExportOptions& options) {
  for (double f : {options.base_fraction, options.augment_fraction}) {
    if (!(f >= 0.0 && f <= 1.0)) throw InvalidInput("export: fractions must be in [0, 1]");
  }
  std::set<std::string> seen;
  std::vector<LabeledPair> unique_base;
  for (const auto& p : base) {
    if (seen.insert(pair_key(p.premise, p.hypothesis)).second) unique_base.push_back(p);
  }

  // Augment pool per mode, in enum order, minus anything already in base.
  std::map<GenerationMode, std::vector<const AugmentExample*>> pools;
  std::size_t pool_size = 0;
  for (const auto& e : augment) {
    if (e.label != label_for_mode(e.provenance_mode)) {
      throw InvalidInput("export: augment label does not match its mode");
    }
    if (!seen.insert(pair_key(e.premise, e.hypothesis)).second) continue;
    pools[e.provenance_mode].push_back(&e);
    ++pool_size;
  }

  const std::size_t n_base = fraction_count(options.base_fraction, unique_base.size());
  const std::size_t n_aug = fraction_count(options.augment_fraction, unique_base.size());

  ExportResult result;
  std::map<std::string, std::size_t> histogram;
  SeededRng base_rng(derive_seed(options.seed, kBaseStream));
  for (auto i : base_rng.sample_indices(unique_base.size(), n_base)) {
    result.rows.push_back(unique_base[i]);
    result.rows.back().origin = "base";
  }
  histogram["base"] = n_base;

  // Quota per mode.
  std::map<GenerationMode, std::size_t> quota;
  if (n_aug > 0) {
    if (options.equal_mode_shares) {
      if (pools.empty()) throw Shortfall("export: augment pool is empty; need " +
                                         std::to_string(n_aug));
      const std::size_t share = n_aug / pools.size();
      std::size_t extra = n_aug % pools.size();
      for (const auto& [mode, pool] : pools) quota[mode] = share + (extra > 0 ? (--extra, 1) : 0);
      std::string missing;
      for (const auto& [mode, q] : quota) {
        if (pools[mode].size() < q) {
          missing += " " + std::string(mode_name(mode)) + ": need " + std::to_string(q) +
                     ", have " + std::to_string(pools[mode].size()) + ";";
        }
      }
      if (!missing.empty()) throw Shortfall("export: augment pool too small:" + missing);
    } else if (pool_size < n_aug) {
      throw Shortfall("export: augment pool too small: need " + std::to_string(n_aug) +
                      ", have " + std::to_string(pool_size));
    }
  }

  SeededRng pool_rng(derive_seed(options.seed, kPoolStream));
  auto take = [&](const AugmentExample& e) {
    result.rows.push_back({e.premise, e.hypothesis, e.label,
                           std::string(mode_name(e.provenance_mode))});
    ++histogram[std::string(mode_name(e.provenance_mode))];
  };
  if (n_aug > 0 && options.equal_mode_shares) {
    for (const auto& [mode, pool] : pools) {
      for (auto i : pool_rng.sample_indices(pool.size(), quota[mode])) take(*pool[i]);
    }
  } else if (n_aug > 0) {
    std::vector<const AugmentExample*> flat;
    for (const auto& [mode, pool] : pools) flat.insert(flat.end(), pool.begin(), pool.end());
    for (auto i : pool_rng.sample_indices(flat.size(), n_aug)) take(*flat[i]);
  }

  SeededRng shuffle_rng(derive_seed(options.seed, kShuffleStream));
  shuffle_rng.shuffle(result.rows);

  json labels = json::object();
  for (const auto& r : result.rows) {
    labels[std::string(to_string(r.label))] = labels.value(std::string(to_string(r.label)), 0) + 1;
  }
  result.manifest = json{{"seed", options.seed},
                         {"base_fraction", options.base_fraction},
                         {"augment_fraction", options.augment_fraction},
                         {"equal_mode_shares", options.equal_mode_shares},
                         {"base_available", unique_base.size()},
                         {"base_duplicates_dropped", base.size() - unique_base.size()},
                         {"augment_available", pool_size},
                         {"base_selected", n_base},
                         {"augment_selected", n_aug},
                         {"total", result.rows.size()},
                         {"provenance", histogram},
                         {"labels", labels}};
  return result;
}

}  // namespace proofsmith
