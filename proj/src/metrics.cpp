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


#include "proofsmith/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "proofsmith/error.hpp"

namespace proofsmith {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string with_fact(const std::string& left, const std::string& fact) {
  std::string out(trim(left));
  if (!out.empty() && out.back() != '.' && out.back() != '!' && out.back() != '?') out += '.';
  return out + " " + std::string(trim(fact));
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

// Running mean that stays unset until it sees a value.
struct Mean {
  double sum = 0.0;
  int count = 0;
  void add(double x) {
    sum += x;
    ++count;
  }
  std::optional<double> get() const {
    if (count == 0) return std::nullopt;
    return sum / count;
  }
};

}  // namespace

std::string_view to_string(PairMode mode) {
  return mode == PairMode::kPlain ? "plain" : "fact_concat";
}

PairMode parse_pair_mode(std::string_view name) {
  if (name == "plain") return PairMode::kPlain;
  if (name == "fact_concat") return PairMode::kFactConcat;
  throw InvalidInput("unknown pair mode: " + std::string(name));
}

std::vector<StepPair> consecutive_pairs(const Proof& proof, PairMode mode,
                                        std::vector<std::string>* warnings) {
  std::vector<StepPair> out;
  Sentence prev = proof.premise;
  std::vector<std::string> pending;
  auto left_with_facts = [&]() {
    if (mode == PairMode::kPlain || pending.empty()) return prev;
    std::string text = prev.text();
    for (const auto& f : pending) text = with_fact(text, f);
    return Sentence(text);
  };
  for (const auto& step : proof.steps) {
    if (step.kind == StepKind::kFact) {
      pending.push_back(step.sentence.text());
      continue;
    }
    out.push_back({left_with_facts(), step.sentence});
    prev = step.sentence;
    pending.clear();
  }
  if (out.empty() && warnings) {
    warnings->push_back("proof has no inferred steps; scoring (P, H) only");
  }
  out.push_back({left_with_facts(), proof.hypothesis});
  return out;
}

bool ProofMetrics::non_minimal() const {
  for (double j : pair_jaccard) {
    if (j == 1.0) return true;
  }
  return false;
}

ProofMetrics score_proof(const Proof& proof, const Oracle& judge_oracle, const Tagger& tagger,
                         PairMode mode) {
  ProofMetrics m;
  m.proof_id = proof.id;
  m.mode = mode;
  m.num_steps = proof.num_inferred();
  const auto pairs = consecutive_pairs(proof, mode, &m.warnings);

  std::vector<TextPair> batch;
  for (const auto& p : pairs) {
    batch.push_back({p.left.text(), p.right.text()});
    m.pair_bleu4.push_back(bleu4(p.right.tokens(), p.left.tokens()));
    m.pair_jaccard.push_back(jaccard(p.left.tokens(), p.right.tokens()));
  }
  batch.push_back({proof.premise.text(), proof.hypothesis.text()});
  m.ph_bleu4 = bleu4(proof.hypothesis.tokens(), proof.premise.tokens());
  m.ph_jaccard = jaccard(proof.premise.tokens(), proof.hypothesis.tokens());

  m.pair_labels.assign(pairs.size(), std::nullopt);
  m.pair_p_entail.assign(pairs.size(), kNaN);
  m.ph_p_entail = kNaN;
  try {
    const auto judgments = judge(judge_oracle, batch);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      m.pair_labels[i] = judgments[i].label;
      m.pair_p_entail[i] = judgments[i].p_entail;
    }
    m.ph_label = judgments.back().label;
    m.ph_p_entail = judgments.back().p_entail;
  } catch (const OracleUnavailable& e) {
    m.errors.push_back(std::string("judge unavailable: ") + e.what());
  } catch (const ProtocolError& e) {
    m.errors.push_back(std::string("judge protocol error: ") + e.what());
  }

  m.keywords_premise = count_keywords(proof.premise, tagger);
  m.keywords_hypothesis = count_keywords(proof.hypothesis, tagger);
  Mean inner;
  for (const auto& s : proof.steps) {
    if (s.kind == StepKind::kInferred) inner.add(count_keywords(s.sentence, tagger));
  }
  m.keywords_intermediate_mean = inner.get();
  return m;
}

json ProofMetrics::to_json() const {
  json labels = json::array();
  for (const auto& l : pair_labels) {
    labels.push_back(l ? json(std::string(proofsmith::to_string(*l))) : json(nullptr));
  }
  json p_entail = json::array();
  for (double p : pair_p_entail) p_entail.push_back(std::isnan(p) ? json(nullptr) : json(p));
  return json{{"proof_id", proof_id},
              {"mode", std::string(proofsmith::to_string(mode))},
              {"pair_labels", labels},
              {"pair_p_entail", p_entail},
              {"pair_bleu4", pair_bleu4},
              {"pair_jaccard", pair_jaccard},
              {"num_steps", num_steps},
              {"ph_label", ph_label ? json(std::string(proofsmith::to_string(*ph_label)))
                                    : json(nullptr)},
              {"ph_p_entail", std::isnan(ph_p_entail) ? json(nullptr) : json(ph_p_entail)},
              {"ph_bleu4", ph_bleu4},
              {"ph_jaccard", ph_jaccard},
              {"keywords_premise", keywords_premise},
              {"keywords_intermediate_mean", opt(keywords_intermediate_mean)},
              {"keywords_hypothesis", keywords_hypothesis},
              {"non_minimal", non_minimal()},
              {"warnings", warnings},
              {"errors", errors}};
}

ProofMetrics ProofMetrics::from_json(const json& j) {
  try {
    ProofMetrics m;
    m.proof_id = j.at("proof_id").get<std::string>();
    m.mode = parse_pair_mode(j.at("mode").get<std::string>());
    for (const auto& l : j.at("pair_labels")) {
      m.pair_labels.push_back(l.is_null() ? std::nullopt
                                          : std::optional(parse_label(l.get<std::string>())));
    }
    for (const auto& p : j.at("pair_p_entail")) {
      m.pair_p_entail.push_back(p.is_null() ? kNaN : p.get<double>());
    }
    m.pair_bleu4 = j.at("pair_bleu4").get<std::vector<double>>();
    m.pair_jaccard = j.at("pair_jaccard").get<std::vector<double>>();
    m.num_steps = j.at("num_steps").get<int>();
    if (!j.at("ph_label").is_null()) m.ph_label = parse_label(j.at("ph_label").get<std::string>());
    m.ph_p_entail = opt_from(j, "ph_p_entail").value_or(kNaN);
    m.ph_bleu4 = j.at("ph_bleu4").get<double>();
    m.ph_jaccard = j.at("ph_jaccard").get<double>();
    m.keywords_premise = j.at("keywords_premise").get<double>();
    m.keywords_intermediate_mean = opt_from(j, "keywords_intermediate_mean");
    m.keywords_hypothesis = j.at("keywords_hypothesis").get<double>();
    m.warnings = j.value("warnings", std::vector<std::string>{});
    m.errors = j.value("errors", std::vector<std::string>{});
    const std::size_t n = m.pair_labels.size();
    if (m.pair_bleu4.size() != n || m.pair_jaccard.size() != n || m.pair_p_entail.size() != n) {
      throw InvalidInput("metrics record: pair list lengths differ");
    }
    return m;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("metrics record: ") + e.what());
  }
}

Proof negate_gold(const Proof& proof, const Oracle& oracle, int beam) {
  Proof out = proof;
  out.meta["baseline"] = "negated";
  if (out.num_inferred() == 0) {
    out.warnings.push_back("negate: proof has no inferred steps");
    return out;
  }
  for (auto& step : out.steps) {
    if (step.kind != StepKind::kInferred) continue;
    step.sim.reset();
    auto c = generate(oracle, GenerationMode::kContradict, step.sentence, 1, beam);
    if (c.empty()) {
      step.flags.push_back("negation-failed");
      out.warnings.push_back("negate: no contradiction for step " + std::to_string(step.j));
      continue;
    }
    step.sentence = std::move(c.front());
    step.flags.push_back("negated");
  }
  return out;
}

LexiconSubstituter::LexiconSubstituter(const MockLexicon& lexicon)
    : vocab_(lexicon.vocabulary()), digest_(lexicon.digest()) {
  if (vocab_.size() < 2) throw InvalidInput("substituter: vocab pool needs >= 2 words");
}

std::string LexiconSubstituter::substitute(const Tokens& tokens, std::size_t pos,
                                           SeededRng& rng) const {
  for (;;) {
    const std::string& w = vocab_[rng.below(vocab_.size())];
    if (w != tokens[pos]) return w;
  }
}

std::size_t perturb_count(double ratio, std::size_t w) {
  if (!(ratio > 0.0 && ratio <= 1.0)) throw InvalidInput("perturb: ratio must be in (0, 1]");
  // The epsilon keeps products such as 0.3 * 10 from rounding up to 4.
  const auto c = static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(w) - 1e-9));
  return std::min(c, w);
}

Proof perturb_gold(const Proof& proof, double ratio, const Substituter& substituter,
                   std::uint64_t seed) {
  perturb_count(ratio, 1);  // validates ratio
  Proof out = proof;
  out.meta["baseline"] = "perturbed";
  out.meta["perturb"] = {{"ratio", ratio}, {"seed", seed}, {"substituter", substituter.id()}};
  for (auto& step : out.steps) {
    if (step.kind != StepKind::kInferred) continue;
    Tokens tokens = step.sentence.tokens();
    SeededRng rng(derive_seed(seed, static_cast<std::uint64_t>(step.j)));
    for (std::size_t pos : rng.sample_indices(tokens.size(), perturb_count(ratio, tokens.size()))) {
      tokens[pos] = substituter.substitute(tokens, pos, rng);
    }
    step.sentence = Sentence(join_tokens(tokens));
    step.sim.reset();
    step.flags.push_back("perturbed");
  }
  return out;
}

AggregateReport aggregate(const std::vector<ProofMetrics>& metrics, std::string name) {
  if (metrics.empty()) throw InvalidInput("aggregate: no proofs");
  struct Group {
    Mean correct, b4, js;
  };
  Group ph, first, inner, last;
  Mean steps, kw_p, kw_i, kw_h;
  AggregateReport r;
  r.name = std::move(name);
  auto entailed = [](const std::optional<NliLabel>& l) {
    return l == NliLabel::kEntailment ? 100.0 : 0.0;
  };
  for (const auto& m : metrics) {
    ++r.population;
    if (!m.errors.empty()) ++r.judge_errors;
    steps.add(m.num_steps);
    kw_p.add(m.keywords_premise);
    kw_h.add(m.keywords_hypothesis);
    if (m.keywords_intermediate_mean) kw_i.add(*m.keywords_intermediate_mean);
    if (m.ph_label) ph.correct.add(entailed(m.ph_label));
    ph.b4.add(m.ph_bleu4);
    ph.js.add(100.0 * m.ph_jaccard);
    if (m.num_steps == 0) continue;

    const std::size_t last_i = m.pair_labels.size() - 1;
    if (m.pair_labels[0]) first.correct.add(entailed(m.pair_labels[0]));
    first.b4.add(m.pair_bleu4[0]);
    first.js.add(100.0 * m.pair_jaccard[0]);
    if (m.pair_labels[last_i]) last.correct.add(entailed(m.pair_labels[last_i]));
    last.b4.add(m.pair_bleu4[last_i]);
    last.js.add(100.0 * m.pair_jaccard[last_i]);

    // Interior pairs are averaged within the proof first.
    Mean c, b, j;
    for (std::size_t i = 1; i < last_i; ++i) {
      if (m.pair_labels[i]) c.add(entailed(m.pair_labels[i]));
      b.add(m.pair_bleu4[i]);
      j.add(100.0 * m.pair_jaccard[i]);
    }
    if (c.get()) inner.correct.add(*c.get());
    if (b.get()) inner.b4.add(*b.get());
    if (j.get()) inner.js.add(*j.get());
  }
  auto stats = [](const Group& g) {
    return GroupStats{g.correct.get(), g.b4.get(), g.js.get(), g.b4.count};
  };
  r.ph = stats(ph);
  r.p_i1 = stats(first);
  r.i1_in = stats(inner);
  r.in_h = stats(last);
  r.steps = steps.get();
  r.keywords_premise = kw_p.get();
  r.keywords_intermediate = kw_i.get();
  r.keywords_hypothesis = kw_h.get();
  return r;
}

json AggregateReport::to_json() const {
  auto group = [](const GroupStats& g) {
    return json{{"B4", opt(g.bleu4)}, {"JS", opt(g.jaccard)}, {"proofs", g.pairs}};
  };
  return json{{"name", name},
              {"population", population},
              {"judge_errors", judge_errors},
              {"correctness",
               {{"P-H", opt(ph.correctness)},
                {"P-I1", opt(p_i1.correctness)},
                {"I1-In", opt(i1_in.correctness)},
                {"In-H", opt(in_h.correctness)}}},
              {"minimality",
               {{"P-H", group(ph)},
                {"P-I1", group(p_i1)},
                {"I1-In", group(i1_in)},
                {"In-H", group(in_h)}}},
              {"steps", opt(steps)},
              {"keywords",
               {{"P", opt(keywords_premise)},
                {"I1-In", opt(keywords_intermediate)},
                {"H", opt(keywords_hypothesis)}}}};
}

namespace {

std::string cell(const std::optional<double>& v, const char* fmt, int width) {
  char buf[32];
  if (v) {
    std::snprintf(buf, sizeof(buf), fmt, *v);
  } else {
    std::snprintf(buf, sizeof(buf), "%s", "-");
  }
  std::string s(buf);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), ' ');
  return s;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string format_report(const std::vector<AggregateReport>& rows) {
  std::size_t name_w = 9;
  for (const auto& r : rows) name_w = std::max(name_w, r.name.size());
  std::string out;
  out += pad("", name_w) + " | " + pad("Correctness (%)", 31) + " | " +
         pad("P-H", 15) + " | " + pad("P-I1", 15) + " | " + pad("I1-In", 15) + " | " +
         pad("In-H", 15) + " | " + pad("# Steps", 7) + " | # Keywords\n";
  out += pad("Algorithm", name_w) + " |    P-H    P-I1   I1-In    In-H |     B4      JS |" +
         "     B4      JS |     B4      JS |     B4      JS |         |     P   I1-In       H\n";
  out += std::string(name_w, '-') + "-+-" + std::string(31, '-') + "-+-" +
         std::string(15, '-') + "-+-" + std::string(15, '-') + "-+-" + std::string(15, '-') +
         "-+-" + std::string(15, '-') + "-+-" + std::string(7, '-') + "-+-" +
         std::string(21, '-') + "\n";
  for (const auto& r : rows) {
    std::string line = pad(r.name, name_w) + " | ";
    line += cell(r.ph.correctness, "%.2f", 6) + "  " + cell(r.p_i1.correctness, "%.2f", 6) +
            "  " + cell(r.i1_in.correctness, "%.2f", 6) + "  " +
            cell(r.in_h.correctness, "%.2f", 6) + " | ";
    for (const GroupStats* g : {&r.ph, &r.p_i1, &r.i1_in, &r.in_h}) {
      line += cell(g->bleu4, "%.4f", 6) + "  " + cell(g->jaccard, "%.2f", 6) + " | ";
    }
    line += cell(r.steps, "%.2f", 7) + " | " + cell(r.keywords_premise, "%.2f", 5) + "  " +
            cell(r.keywords_intermediate, "%.2f", 6) + "  " +
            cell(r.keywords_hypothesis, "%.2f", 6);
    out += line + "\n";
  }
  return out;
}

void write_metrics(const std::string& path, const std::vector<ProofMetrics>& metrics) {
  std::string out;
  for (const auto& m : metrics) out += m.to_json().dump() + "\n";
  write_file(path, out);
}

std::vector<ProofMetrics> read_metrics(const std::string& path) {
  std::vector<ProofMetrics> out;
  const auto lines = split(read_file(path), '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      out.push_back(ProofMetrics::from_json(json::parse(lines[i])));
    } catch (const json::exception& e) {
      throw InvalidInput(path + ":" + std::to_string(i + 1) + ": " + e.what());
    } catch (const InvalidInput& e) {
      throw InvalidInput(path + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace proofsmith
