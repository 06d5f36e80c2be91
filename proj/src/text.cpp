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

#include "proofsmith/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "proofsmith/error.hpp"

namespace proofsmith {

namespace {

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

const std::unordered_set<std::string_view>& closed_class_words() {
  static const std::unordered_set<std::string_view> words = {
      "a", "an", "the", "this", "that", "these", "those", "some", "any",
      "each", "every", "all", "no", "not", "never", "nor", "and", "or", "but",
      "if", "then", "of", "in", "on", "at", "to", "from", "by", "with",
      "without", "for", "near", "under", "over", "behind", "into", "onto",
      "through", "across", "around", "about", "above", "below", "between",
      "up", "down", "out", "off", "as", "than", "inside", "outside", "i",
      "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
      "them", "his", "its", "our", "their", "my", "your", "is", "are", "was",
      "were", "be", "been", "being", "am", "do", "does", "did", "has", "have",
      "had", "will", "would", "can", "could", "should", "may", "might",
      "must", "there", "here", "who", "whom", "which", "what", "while", "so",
      "too", "very", "also", "just", "s", "t", "someone", "something",
      "nothing", "nobody", "one", "another", "other"};
  return words;
}

std::set<std::string> inflect(std::initializer_list<std::string_view> stems) {
  std::set<std::string> out;
  for (std::string_view stem : stems) {
    std::string s(stem);
    out.insert(s);
    const bool sibilant = ends_with(s, "s") || ends_with(s, "sh") ||
                          ends_with(s, "ch") || ends_with(s, "x") ||
                          ends_with(s, "o");
    out.insert(sibilant ? s + "es" : s + "s");
  }
  return out;
}

const std::set<std::string>& builtin_verbs() {
  static const std::set<std::string> verbs = [] {
    auto v = inflect({"run",     "play",   "sit",     "stand",   "walk",
                      "chase",   "jump",   "ride",    "hold",    "eat",
                      "wear",    "sleep",  "swim",    "throw",   "catch",
                      "carry",   "look",   "watch",   "talk",    "wait",
                      "drink",   "cook",   "read",    "write",   "sing",
                      "dance",   "climb",  "push",    "pull",    "drive",
                      "smile",   "laugh",  "work",    "produce", "block",
                      "make",    "take",   "give",    "get",     "go",
                      "come",    "see",    "perform", "entertain",
                      "propel",  "grab",   "spit",    "help",    "marry",
                      "put",     "sprint", "bark",    "fetch",   "kick",
                      "paint",   "build",  "fix",     "wash",    "cross",
                      "shine",   "grow",   "live",    "need",    "like",
                      "love",    "use",    "cause",   "contain", "hit",
                      "sail",    "float",  "fly"});
    for (std::string_view irregular :
         {"ran", "sat", "stood", "rode", "held", "ate", "wore", "slept",
          "swam", "threw", "caught", "drank", "wrote", "sang", "drove",
          "made", "took", "gave", "got", "went", "came", "saw", "flew",
          "grew", "built", "carries", "flies"}) {
      v.insert(std::string(irregular));
    }
    return v;
  }();
  return verbs;
}

const std::set<std::string>& builtin_adjectives() {
  static const std::set<std::string> adjectives = {
      "black",  "white",        "red",    "green",  "blue",    "yellow",
      "brown",  "orange",       "pink",   "purple", "gray",    "grey",
      "big",    "large",        "small",  "little", "tiny",    "huge",
      "young",  "old",          "new",    "happy",  "glad",    "sad",
      "tall",   "short",        "long",   "female", "male",    "wet",
      "dry",    "cold",         "hot",    "warm",   "fast",    "slow",
      "loud",   "quiet",        "rough",  "smooth", "pretty",  "many",
      "several", "hard",        "soft",   "empty",  "full",    "busy",
      "dark",   "bright",       "heavy",  "professional", "angry", "calm",
      "clean",  "dirty",        "fresh",  "sunny",  "snowy",   "awake",
      "asleep", "open",         "closed"};
  return adjectives;
}

const std::set<std::string>& ing_nouns() {
  static const std::set<std::string> nouns = {
      "thing", "king",    "ring",     "string",  "wing",  "spring",
      "morning", "evening", "building", "ceiling", "clothing", "painting"};
  return nouns;
}

}  // namespace

Tokens normalize_tokens(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    if (is_word_byte(c)) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty() &&
      std::all_of(text.begin(), text.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      })) {
    throw InvalidInput("normalize_tokens: empty or whitespace-only text");
  }
  return tokens;
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string normalized_key(std::string_view text) {
  return join_tokens(normalize_tokens(text));
}

Sentence::Sentence(std::string text) : text_(std::move(text)) {
  tokens_ = normalize_tokens(text_);
  if (tokens_.empty()) {
    throw InvalidInput("sentence has no word tokens: \"" + text_ + "\"");
  }
}

void Sentence::set_embedding(Embedding v) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-6) {
    throw InvalidInput("sentence embedding is not unit-norm");
  }
  embedding_ = std::move(v);
}

double bleu4(std::span<const std::string> candidate,
             std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) {
    throw InvalidInput("bleu4: empty token list");
  }
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    if (candidate.size() < n) continue;  // vacuous order, precision 1
    std::map<std::vector<std::string>, int> ref_counts;
    for (std::size_t i = 0; i + n <= reference.size(); ++i) {
      ++ref_counts[{reference.begin() + i, reference.begin() + i + n}];
    }
    std::map<std::vector<std::string>, int> cand_counts;
    for (std::size_t i = 0; i + n <= candidate.size(); ++i) {
      ++cand_counts[{candidate.begin() + i, candidate.begin() + i + n}];
    }
    int matches = 0;
    for (const auto& [gram, count] : cand_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
    }
    const double total = static_cast<double>(candidate.size() - n + 1);
    const double p = matches > 0 ? matches / total : kBleuEpsilon / total;
    log_sum += 0.25 * std::log(p);
  }
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return brevity * std::exp(log_sum);
}

double jaccard(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) throw InvalidInput("jaccard: empty token list");
  std::set<std::string_view> sa(a.begin(), a.end());
  std::set<std::string_view> sb(b.begin(), b.end());
  std::size_t common = 0;
  for (auto t : sa) common += sb.count(t);
  const std::size_t unioned = sa.size() + sb.size() - common;
  return static_cast<double>(common) / static_cast<double>(unioned);
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw InvalidInput("cosine: dimension mismatch (" +
                       std::to_string(u.size()) + " vs " +
                       std::to_string(v.size()) + ")");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw InvalidInput("cosine: zero vector");
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

Embedding l2_normalize(Embedding v) {
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 == 0.0) throw InvalidInput("l2_normalize: zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : v) x *= inv;
  return v;
}

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "noun";
    case PosTag::kVerb: return "verb";
    case PosTag::kAdjective: return "adjective";
    case PosTag::kOther: return "other";
  }
  return "other";
}

PosTag parse_pos_tag(std::string_view name) {
  if (name == "noun") return PosTag::kNoun;
  if (name == "verb") return PosTag::kVerb;
  if (name == "adjective") return PosTag::kAdjective;
  if (name == "other") return PosTag::kOther;
  throw InvalidInput("unknown part-of-speech tag: " + std::string(name));
}

bool is_closed_class(std::string_view token) {
  return closed_class_words().count(token) > 0;
}

HeuristicTagger::HeuristicTagger(std::vector<std::string> extra_verbs,
                                 std::vector<std::string> extra_adjectives)
    : extra_verbs_(std::move(extra_verbs)),
      extra_adjectives_(std::move(extra_adjectives)) {
  std::sort(extra_verbs_.begin(), extra_verbs_.end());
  std::sort(extra_adjectives_.begin(), extra_adjectives_.end());
}

PosTag HeuristicTagger::tag_word(std::string_view word,
                                 std::string_view previous,
                                 PosTag previous_tag) const {
  const std::string w(word);
  if (is_closed_class(word)) return PosTag::kOther;
  if (std::all_of(w.begin(), w.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return PosTag::kOther;
  }
  if (builtin_adjectives().count(w) ||
      std::binary_search(extra_adjectives_.begin(), extra_adjectives_.end(), w)) {
    return PosTag::kAdjective;
  }
  if (builtin_verbs().count(w) ||
      std::binary_search(extra_verbs_.begin(), extra_verbs_.end(), w)) {
    return PosTag::kVerb;
  }
  if (w.size() > 4 && ends_with(w, "ly") && w != "family") return PosTag::kOther;
  for (std::string_view suffix : {"ous", "ful", "less", "able", "ible", "ish"}) {
    if (w.size() > suffix.size() + 2 && ends_with(w, suffix)) {
      return PosTag::kAdjective;
    }
  }
  if (w.size() > 4 && ends_with(w, "ing") && !ing_nouns().count(w)) {
    return PosTag::kVerb;
  }
  if (w.size() > 4 && ends_with(w, "ed")) return PosTag::kVerb;
  // "<noun> <word>s" with no determiner in between reads as a verb.
  if (previous_tag == PosTag::kNoun && !previous.empty() && w.size() > 3 &&
      ends_with(w, "s") && !ends_with(w, "ss")) {
    return PosTag::kVerb;
  }
  return PosTag::kNoun;
}

std::vector<TokenTag> HeuristicTagger::tag(const Sentence& sentence) const {
  std::vector<TokenTag> out;
  out.reserve(sentence.tokens().size());
  std::string_view previous;
  PosTag previous_tag = PosTag::kOther;
  for (const auto& token : sentence.tokens()) {
    PosTag t = tag_word(token, previous, previous_tag);
    out.push_back({token, t});
    previous = token;
    previous_tag = t;
  }
  return out;
}

int count_keywords(const Sentence& sentence, const Tagger& tagger) {
  int count = 0;
  for (const auto& tt : tagger.tag(sentence)) {
    if (tt.tag != PosTag::kOther) ++count;
  }
  return count;
}

}  // namespace proofsmith
