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

#include "proofsmith/mock_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "proofsmith/error.hpp"
#include "proofsmith/util.hpp"

namespace proofsmith {

// Defined in the generated mock_lexicon_data.cpp.
extern const char* const kBuiltinLexiconTsv;

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_article(std::string_view t) { return t == "a" || t == "an" || t == "the"; }
bool is_copula(std::string_view t) {
  return t == "is" || t == "are" || t == "was" || t == "were";
}
bool is_negator(std::string_view t) {
  return t == "not" || t == "no" || t == "never" || t == "nobody" ||
         t == "nothing" || t == "none";
}
bool is_preposition(std::string_view t) {
  static const std::set<std::string_view> preps = {
      "in",   "on",     "at",      "with",    "near",   "under",
      "behind", "into", "onto",    "through", "across", "by",
      "inside", "outside", "during", "along",  "beside", "over"};
  return preps.count(t) > 0;
}

void add_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// MockLexicon

const MockLexicon& MockLexicon::builtin() {
  static const MockLexicon lexicon = parse(kBuiltinLexiconTsv);
  return lexicon;
}

MockLexicon MockLexicon::load(const std::string& path) {
  return parse(read_file(path));
}

MockLexicon MockLexicon::parse(std::string_view tsv) {
  MockLexicon lex;
  lex.digest_ = "fnv1a64:" + hex64(fnv1a64(tsv));
  std::map<std::string, std::set<std::string>> synonym_edges;
  int line_no = 0;
  for (const auto& raw : split(tsv, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    for (auto& f : fields) f = std::string(trim(f));
    const std::string& kind = fields[0];
    auto need = [&](std::size_t n) {
      if (fields.size() != n) {
        throw InvalidInput("lexicon line " + std::to_string(line_no) +
                           ": expected " + std::to_string(n) + " fields");
      }
    };
    if (kind == "hypernym") {
      need(3);
      if (lex.hypernym_.count(fields[1])) {
        throw InvalidInput("lexicon line " + std::to_string(line_no) +
                           ": second hypernym for " + fields[1]);
      }
      lex.hypernym_[fields[1]] = fields[2];
    } else if (kind == "synonym") {
      need(3);
      synonym_edges[fields[1]].insert(fields[2]);
      synonym_edges[fields[2]].insert(fields[1]);
    } else if (kind == "antonym") {
      need(3);
      lex.antonym_[fields[1]].insert(fields[2]);
      lex.antonym_[fields[2]].insert(fields[1]);
    } else if (kind == "plural") {
      need(3);
      lex.plural_of_[fields[1]] = fields[2];
      lex.singular_of_[fields[2]] = fields[1];
    } else if (kind == "adjective") {
      need(2);
      add_unique(lex.adjectives_, fields[1]);
    } else if (kind == "verb") {
      need(2);
      add_unique(lex.verbs_, fields[1]);
    } else if (kind == "neutral") {
      need(2);
      add_unique(lex.neutral_, fields[1]);
    } else if (kind == "vocab") {
      need(2);
      const auto toks = normalize_tokens(fields[1]);
      if (toks.size() != 1 || toks[0] != fields[1]) {
        throw InvalidInput("lexicon line " + std::to_string(line_no) +
                           ": vocab entries must be single normalized tokens");
      }
      add_unique(lex.vocab_, fields[1]);
    } else {
      throw InvalidInput("lexicon line " + std::to_string(line_no) +
                         ": unknown kind '" + kind + "'");
    }
  }
  // Close synonym groups transitively; the representative is the
  // alphabetically first member.
  std::set<std::string> visited;
  for (const auto& [word, _] : synonym_edges) {
    if (visited.count(word)) continue;
    std::set<std::string> group;
    std::vector<std::string> stack{word};
    while (!stack.empty()) {
      auto w = stack.back();
      stack.pop_back();
      if (!group.insert(w).second) continue;
      for (const auto& n : synonym_edges[w]) stack.push_back(n);
    }
    std::vector<std::string> members(group.begin(), group.end());
    for (const auto& m : members) {
      visited.insert(m);
      lex.synonym_root_[m] = members.front();
      lex.synonym_group_[m] = members;
    }
  }
  return lex;
}

bool MockLexicon::known(std::string_view word) const {
  const std::string w(word);
  if (hypernym_.count(w) || synonym_root_.count(w) || plural_of_.count(w)) {
    return true;
  }
  for (const auto& [_, parent] : hypernym_) {
    if (parent == w) return true;
  }
  return false;
}

std::string MockLexicon::singular(std::string_view word) const {
  const std::string w(word);
  if (auto it = singular_of_.find(w); it != singular_of_.end()) return it->second;
  if (known(w)) return w;
  if (ends_with(w, "ies") && w.size() > 3) {
    std::string stem = w.substr(0, w.size() - 3) + "y";
    if (known(stem)) return stem;
  }
  if (ends_with(w, "es") && w.size() > 2) {
    std::string stem = w.substr(0, w.size() - 2);
    if (known(stem)) return stem;
  }
  if (ends_with(w, "s") && w.size() > 1) {
    std::string stem = w.substr(0, w.size() - 1);
    if (known(stem)) return stem;
  }
  return w;
}

bool MockLexicon::is_plural(std::string_view word) const {
  return singular(word) != word;
}

std::string MockLexicon::plural(std::string_view singular_word) const {
  const std::string w(singular_word);
  if (auto it = plural_of_.find(w); it != plural_of_.end()) return it->second;
  if (ends_with(w, "s") || ends_with(w, "sh") || ends_with(w, "ch") ||
      ends_with(w, "x")) {
    return w + "es";
  }
  if (w.size() > 1 && ends_with(w, "y") &&
      std::string_view("aeiou").find(w[w.size() - 2]) == std::string::npos) {
    return w.substr(0, w.size() - 1) + "ies";
  }
  return w + "s";
}

std::optional<std::string> MockLexicon::hypernym(std::string_view word) const {
  const std::string w = singular(word);
  if (auto it = hypernym_.find(w); it != hypernym_.end()) return it->second;
  if (auto g = synonym_group_.find(w); g != synonym_group_.end()) {
    for (const auto& s : g->second) {
      if (auto it = hypernym_.find(s); it != hypernym_.end()) return it->second;
    }
  }
  return std::nullopt;
}

std::vector<std::string> MockLexicon::ancestors(std::string_view word) const {
  std::vector<std::string> chain;
  std::string current = singular(word);
  while (auto parent = hypernym(current)) {
    if (std::find(chain.begin(), chain.end(), *parent) != chain.end() ||
        *parent == singular(word)) {
      break;  // cycle in a user lexicon
    }
    chain.push_back(*parent);
    current = *parent;
  }
  return chain;
}

std::string MockLexicon::taxonomy_root(std::string_view word) const {
  auto chain = ancestors(word);
  if (!chain.empty()) return chain.back();
  const std::string w = singular(word);
  for (const auto& [_, parent] : hypernym_) {
    if (parent == w) return w;
  }
  return "";
}

std::vector<std::string> MockLexicon::synonyms(std::string_view word) const {
  std::vector<std::string> out;
  auto it = synonym_group_.find(std::string(word));
  if (it == synonym_group_.end()) return out;
  for (const auto& s : it->second) {
    if (s != word) out.push_back(s);
  }
  return out;
}

std::vector<std::string> MockLexicon::antonyms(std::string_view word) const {
  auto it = antonym_.find(std::string(word));
  if (it == antonym_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::string MockLexicon::canonical(std::string_view word) const {
  std::string w = singular(word);
  if (auto it = synonym_root_.find(w); it != synonym_root_.end()) {
    return it->second;
  }
  return w;
}

bool MockLexicon::is_adjective(std::string_view word) const {
  return std::find(adjectives_.begin(), adjectives_.end(), word) !=
         adjectives_.end();
}

void fix_articles(Tokens& tokens) {
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] != "a" && tokens[i] != "an") continue;
    const char first = tokens[i + 1].front();
    const bool vowel = std::string_view("aeiou").find(first) != std::string::npos;
    tokens[i] = vowel ? "an" : "a";
  }
}

// ---------------------------------------------------------------------------
// MockOracle

namespace {

std::vector<std::string> tagger_adjectives(const MockLexicon& lex) {
  auto out = lex.adjectives();
  out.insert(out.end(), lex.neutral_adjectives().begin(),
             lex.neutral_adjectives().end());
  return out;
}

}  // namespace

MockOracle::MockOracle(MockLexicon lexicon, std::size_t dim)
    : lexicon_(std::move(lexicon)),
      tagger_(lexicon_.verbs(), tagger_adjectives(lexicon_)),
      dim_(dim) {
  if (dim_ < 8) throw InvalidInput("mock embedding dimension must be >= 8");
}

std::string MockOracle::id() const {
  return "mock-v1:dim=" + std::to_string(dim_) + ":lexicon=" +
         lexicon_.digest();
}

std::vector<Tokens> MockOracle::entail(const Tokens& in) const {
  std::vector<Tokens> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (is_closed_class(in[i])) continue;
    if (auto h = lexicon_.hypernym(in[i])) {
      Tokens t = in;
      t[i] = lexicon_.is_plural(in[i]) ? lexicon_.plural(*h) : *h;
      fix_articles(t);
      out.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (const auto& syn : lexicon_.synonyms(in[i])) {
      Tokens t = in;
      t[i] = syn;
      fix_articles(t);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Tokens> MockOracle::monotonic(const Tokens& in) const {
  std::vector<Tokens> out;
  const Sentence s(join_tokens(in));
  const auto tags = tagger_.tag(s);
  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    if (!lexicon_.is_adjective(in[i])) continue;
    // Attributive use only: "a black dog", not "the dog is black".
    if (tags[i + 1].tag != PosTag::kNoun && tags[i + 1].tag != PosTag::kAdjective) {
      continue;
    }
    Tokens t = in;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
    fix_articles(t);
    out.push_back(std::move(t));
  }
  for (std::size_t i = 2; i < in.size(); ++i) {
    if (is_preposition(in[i])) {
      out.emplace_back(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return out;
}

std::vector<Tokens> MockOracle::contradict(const Tokens& in) const {
  std::vector<Tokens> out;
  Tokens negated = in;
  auto cop = std::find_if(negated.begin(), negated.end(),
                          [](const std::string& t) { return is_copula(t); });
  if (cop != negated.end()) {
    auto next = cop + 1;
    if (next != negated.end() && *next == "not") {
      negated.erase(next);
    } else {
      negated.insert(next, "not");
    }
  } else if (is_article(negated.front()) || negated.front() == "some") {
    negated.front() = "no";
  } else {
    negated.insert(negated.begin(), {"it", "is", "not", "true", "that"});
  }
  out.push_back(std::move(negated));
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (const auto& ant : lexicon_.antonyms(in[i])) {
      Tokens t = in;
      t[i] = ant;
      fix_articles(t);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<Tokens> MockOracle::neutral(const Tokens& in) const {
  std::vector<Tokens> out;
  const auto tags = tagger_.tag(Sentence(join_tokens(in)));
  auto noun = std::find_if(tags.begin(), tags.end(), [](const TokenTag& t) {
    return t.tag == PosTag::kNoun;
  });
  if (noun == tags.end()) return out;
  const auto pos = static_cast<std::ptrdiff_t>(noun - tags.begin());
  for (const auto& adj : lexicon_.neutral_adjectives()) {
    if (std::find(in.begin(), in.end(), adj) != in.end()) continue;
    Tokens t = in;
    t.insert(t.begin() + pos, adj);
    fix_articles(t);
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<Tokens> MockOracle::apply_isa(const Tokens& fact,
                                            const Tokens& other) const {
  Tokens f = fact;
  if (!f.empty() && is_article(f.front())) f.erase(f.begin());
  std::string x, y;
  if (f.size() == 3 && is_copula(f[1])) {
    x = f[0];
    y = f[2];
  } else if (f.size() == 4 && is_copula(f[1]) && (f[2] == "a" || f[2] == "an")) {
    x = f[0];
    y = f[3];
  } else if (f.size() == 4 && f[0] == "all" && f[2] == "are") {
    x = f[1];
    y = f[3];
  } else {
    return std::nullopt;
  }
  x = lexicon_.singular(x);
  y = lexicon_.singular(y);
  if (x == y || other == fact) return std::nullopt;
  Tokens out = other;
  bool changed = false;
  for (auto& t : out) {
    if (lexicon_.singular(t) != x) continue;
    t = lexicon_.is_plural(t) ? lexicon_.plural(y) : y;
    changed = true;
  }
  if (!changed) return std::nullopt;
  fix_articles(out);
  return out;
}

std::optional<Tokens> MockOracle::apply_universal(const Tokens& fact,
                                                  const Tokens& other) const {
  if (fact.size() != 5 || fact[0] != "all" || !is_copula(fact[3])) {
    return std::nullopt;
  }
  const std::string& property = fact[1];
  const std::string& result = fact[4];
  Tokens out = other;
  bool changed = false;
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] == property && is_copula(out[i - 1])) {
      out[i] = result;
      changed = true;
    }
  }
  if (!changed) return std::nullopt;
  return out;
}

std::optional<Tokens> MockOracle::apply_chain(const Tokens& s1,
                                              const Tokens& s2) const {
  auto first_verb = [&](const Tokens& toks) -> std::optional<std::size_t> {
    const auto tags = tagger_.tag(Sentence(join_tokens(toks)));
    for (std::size_t i = 1; i < tags.size(); ++i) {
      if (tags[i].tag == PosTag::kVerb) return i;
    }
    return std::nullopt;
  };
  auto v1 = first_verb(s1);
  auto v2 = first_verb(s2);
  if (!v1 || !v2 || *v2 + 1 >= s2.size()) return std::nullopt;
  std::vector<std::string> subject2;
  for (std::size_t i = 0; i < *v2; ++i) {
    if (!is_article(s2[i])) subject2.push_back(s2[i]);
  }
  if (subject2.size() != 1) return std::nullopt;
  const std::string z = lexicon_.singular(subject2[0]);
  bool linked = false;
  for (std::size_t i = *v1 + 1; i < s1.size(); ++i) {
    if (lexicon_.singular(s1[i]) == z) linked = true;
  }
  if (!linked) return std::nullopt;

  Tokens out(s1.begin(), s1.begin() + static_cast<std::ptrdiff_t>(*v1));
  const std::string& head = s1[*v1 - 1];
  std::string verb = s2[*v2];
  const bool plural_subject =
      lexicon_.is_plural(head) || (ends_with(head, "s") && !ends_with(head, "ss"));
  if (plural_subject && ends_with(verb, "s") && !ends_with(verb, "ss")) {
    if (ends_with(verb, "ches") || ends_with(verb, "shes") ||
        ends_with(verb, "sses") || ends_with(verb, "xes")) {
      verb.resize(verb.size() - 2);
    } else {
      verb.resize(verb.size() - 1);
    }
  }
  out.push_back(verb);
  out.insert(out.end(), s2.begin() + static_cast<std::ptrdiff_t>(*v2) + 1,
             s2.end());
  return out;
}

std::vector<Tokens> MockOracle::conclude(const Tokens& s1,
                                         const Tokens& s2) const {
  std::vector<Tokens> out;
  auto push = [&](std::optional<Tokens> t) {
    if (t) out.push_back(std::move(*t));
  };
  push(apply_isa(s2, s1));
  push(apply_universal(s2, s1));
  push(apply_isa(s1, s2));
  push(apply_universal(s1, s2));
  push(apply_chain(s1, s2));
  push(apply_chain(s2, s1));
  return out;
}

std::vector<Tokens> MockOracle::explain(const Tokens& p, const Tokens& h) const {
  std::vector<Tokens> out;
  std::set<std::string> hyp;
  for (const auto& t : h) hyp.insert(lexicon_.singular(t));
  for (const auto& t : p) {
    if (is_closed_class(t)) continue;
    for (const auto& a : lexicon_.ancestors(t)) {
      if (!hyp.count(a)) continue;
      Tokens s{"a", lexicon_.singular(t), "is", "a", a};
      fix_articles(s);
      out.push_back(std::move(s));
      break;
    }
  }
  return out;
}

std::vector<Tokens> MockOracle::proof(const Tokens& s1, const Tokens& c) const {
  std::vector<Tokens> out;
  std::set<std::string> left, right;
  for (const auto& t : s1) left.insert(lexicon_.singular(t));
  for (const auto& t : c) right.insert(lexicon_.singular(t));
  for (const auto& t : s1) {
    const std::string x = lexicon_.singular(t);
    if (right.count(x) || is_closed_class(x)) continue;
    for (const auto& a : lexicon_.ancestors(x)) {
      if (!right.count(a) || left.count(a)) continue;
      Tokens s{"a", x, "is", "a", a};
      fix_articles(s);
      out.push_back(std::move(s));
      break;
    }
  }
  return out;
}

std::vector<Tokens> MockOracle::rewrites(GenerationMode mode,
                                         std::span<const Tokens> inputs) const {
  if (static_cast<int>(inputs.size()) != mode_arity(mode)) {
    throw InvalidInput("mock: wrong input arity for mode " +
                       std::string(mode_name(mode)));
  }
  switch (mode) {
    case GenerationMode::kEntail: return entail(inputs[0]);
    case GenerationMode::kMonotonic: return monotonic(inputs[0]);
    case GenerationMode::kContradict: return contradict(inputs[0]);
    case GenerationMode::kNeutral: return neutral(inputs[0]);
    case GenerationMode::kConclude: return conclude(inputs[0], inputs[1]);
    case GenerationMode::kExplain: return explain(inputs[0], inputs[1]);
    case GenerationMode::kProof: return proof(inputs[0], inputs[1]);
  }
  return {};
}

std::vector<Candidate> MockOracle::generate_candidates(
    GenerationMode mode, std::span<const std::string> inputs, int beam,
    int num_return) const {
  if (beam < 1 || num_return < 1 || num_return > beam) {
    throw InvalidInput("mock: invalid beam/num_return");
  }
  std::vector<Tokens> token_inputs;
  for (const auto& in : inputs) token_inputs.push_back(normalize_tokens(in));
  auto raw = rewrites(mode, token_inputs);
  std::vector<Candidate> out;
  std::set<std::string> seen;
  for (const auto& t : raw) {
    if (t.empty()) continue;
    std::string text = join_tokens(t);
    if (!seen.insert(text).second) continue;
    out.push_back({std::move(text), -0.1 * static_cast<double>(out.size())});
    if (static_cast<int>(out.size()) == num_return) break;
  }
  return out;
}

std::vector<std::string> MockOracle::content(const Tokens& tokens) const {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (!is_closed_class(t)) out.push_back(lexicon_.canonical(t));
  }
  return out;
}

Embedding MockOracle::embed_tokens(const Tokens& tokens) const {
  auto words = content(tokens);
  if (words.empty()) {
    for (const auto& t : tokens) words.push_back(lexicon_.canonical(t));
  }
  Embedding v(dim_, 0.0);
  auto add = [&](const std::string& feature) {
    const std::uint64_t h = fnv1a64(feature);
    v[h % dim_] += (h >> 63) ? -1.0 : 1.0;
  };
  for (const auto& w : words) {
    add("w:" + w);
    const std::string root = lexicon_.taxonomy_root(w);
    if (!root.empty()) add("c:" + root);
  }
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 == 0.0) {
    // Signed collisions cancelled out; fall back to a fixed direction.
    v[fnv1a64(join_tokens(tokens)) % dim_] = 1.0;
    return v;
  }
  return l2_normalize(std::move(v));
}

std::vector<Embedding> MockOracle::embed_texts(
    std::span<const std::string> texts) const {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(embed_tokens(normalize_tokens(t)));
  return out;
}

bool MockOracle::covers(const std::vector<std::string>& a,
                        const std::vector<std::string>& b) const {
  for (const auto& tb : b) {
    bool covered = false;
    for (const auto& ta : a) {
      if (ta == tb) {
        covered = true;
        break;
      }
      for (const auto& anc : lexicon_.ancestors(ta)) {
        if (lexicon_.canonical(anc) == tb) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) return false;
  }
  return true;
}

NliLabel MockOracle::judge_label(const Tokens& premise,
                                 const Tokens& hypothesis) const {
  for (const auto& p : premise) {
    for (const auto& ant : lexicon_.antonyms(p)) {
      const bool in_h =
          std::find(hypothesis.begin(), hypothesis.end(), ant) != hypothesis.end();
      const bool in_p =
          std::find(premise.begin(), premise.end(), ant) != premise.end();
      if (in_h && !in_p) return NliLabel::kContradiction;
    }
  }
  const bool neg_p = std::any_of(premise.begin(), premise.end(),
                                 [](const std::string& t) { return is_negator(t); });
  const bool neg_h = std::any_of(hypothesis.begin(), hypothesis.end(),
                                 [](const std::string& t) { return is_negator(t); });
  const auto cp = content(premise);
  const auto ch = content(hypothesis);
  if (neg_p == neg_h) {
    const bool ok = neg_p ? covers(ch, cp) : covers(cp, ch);
    return ok ? NliLabel::kEntailment : NliLabel::kNeutral;
  }
  if (covers(cp, ch) || covers(ch, cp)) return NliLabel::kContradiction;
  return NliLabel::kNeutral;
}

std::vector<PairJudgment> MockOracle::judge_pairs(
    std::span<const TextPair> pairs) const {
  std::vector<PairJudgment> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const NliLabel label = judge_label(normalize_tokens(pair.premise),
                                       normalize_tokens(pair.hypothesis));
    const double pe = label == NliLabel::kEntailment ? 0.90 : 0.05;
    const double pn = label == NliLabel::kNeutral ? 0.90 : 0.05;
    const double pc = label == NliLabel::kContradiction ? 0.90 : 0.05;
    out.push_back(make_judgment(pair.premise, pair.hypothesis, pe, pn, pc));
  }
  return out;
}

std::vector<std::vector<TokenTag>> MockOracle::tag_texts(
    std::span<const std::string> texts) const {
  std::vector<std::vector<TokenTag>> out;
  for (const auto& t : texts) out.push_back(tagger_.tag(Sentence(t)));
  return out;
}

}  // namespace proofsmith
