// Copyright 2026 The tosaudit Authors.
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

#include "tosaudit/phrase_matcher.h"

#include "tosaudit/error.h"
#include "tosaudit/unicode.h"

namespace tosaudit {

namespace {

constexpr char kGapSeparator = '\x1f';

std::string_view gap_between(const Sentence& s, const Token& a, const Token& b) {
  return std::string_view(s.text).substr(a.span.end - s.span.start,
                                         b.span.start - a.span.end);
}

}  // namespace

std::string normalize_gap(std::string_view gap) {
  std::string out;
  bool space = false;
  for (char c : gap) {
    if (is_space_byte(c)) {
      space = true;
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  if (space) out.push_back(' ');
  return out;
}

std::string PhraseMatcher::token_key(std::string_view token) const {
  return mode_ == CaseMode::kInsensitive ? fold_case(token) : std::string(token);
}

std::vector<std::string> PhraseMatcher::edge_keys(std::string_view phrase) const {
  std::vector<Token> tokens = tokenize_words(phrase);
  std::vector<std::string> keys;
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::string key;
    if (i > 0) {
      key = normalize_gap(phrase.substr(tokens[i - 1].span.end,
                                        tokens[i].span.start - tokens[i - 1].span.end));
      key.push_back(kGapSeparator);
    }
    key += token_key(tokens[i].text);
    keys.push_back(std::move(key));
  }
  return keys;
}

void PhraseMatcher::add(std::string_view phrase, std::size_t phrase_id) {
  std::vector<std::string> keys = edge_keys(phrase);
  if (keys.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "phrase \"" + std::string(phrase) + "\" has no word");
  }
  size_t node = 0;
  for (const std::string& key : keys) {
    auto it = nodes_[node].next.find(key);
    if (it == nodes_[node].next.end()) {
      nodes_.emplace_back();
      size_t created = nodes_.size() - 1;
      nodes_[node].next.emplace(key, created);
      node = created;
    } else {
      node = it->second;
    }
  }
  if (nodes_[node].phrase_id >= 0) {
    throw Error(ErrorCode::kDuplicate,
                "duplicate surface form \"" + std::string(phrase) + "\"");
  }
  nodes_[node].phrase_id = static_cast<long>(phrase_id);
  ++phrase_count_;
}

bool PhraseMatcher::contains(std::string_view phrase) const {
  size_t node = 0;
  std::vector<std::string> keys = edge_keys(phrase);
  if (keys.empty()) return false;
  for (const std::string& key : keys) {
    auto it = nodes_[node].next.find(key);
    if (it == nodes_[node].next.end()) return false;
    node = it->second;
  }
  return nodes_[node].phrase_id >= 0;
}

bool PhraseMatcher::longest_at(const Sentence& s, std::size_t i,
                               PhraseMatch& out) const {
  const std::vector<Token>& toks = s.tokens;
  size_t node = 0;
  bool found = false;
  for (size_t j = i; j < toks.size(); ++j) {
    std::string key;
    if (j > i) {
      key = normalize_gap(gap_between(s, toks[j - 1], toks[j]));
      key.push_back(kGapSeparator);
    }
    key += token_key(toks[j].text);
    auto it = nodes_[node].next.find(key);
    if (it == nodes_[node].next.end()) break;
    node = it->second;
    if (nodes_[node].phrase_id >= 0) {
      out.first_token = i;
      out.token_count = j - i + 1;
      out.span = CharSpan{toks[i].span.start, toks[j].span.end};
      out.phrase_id = static_cast<size_t>(nodes_[node].phrase_id);
      found = true;
    }
  }
  return found;
}

void PhraseMatcher::all_at(const Sentence& s, std::size_t i,
                           std::vector<PhraseMatch>& out) const {
  const std::vector<Token>& toks = s.tokens;
  size_t node = 0;
  for (size_t j = i; j < toks.size(); ++j) {
    std::string key;
    if (j > i) {
      key = normalize_gap(gap_between(s, toks[j - 1], toks[j]));
      key.push_back(kGapSeparator);
    }
    key += token_key(toks[j].text);
    auto it = nodes_[node].next.find(key);
    if (it == nodes_[node].next.end()) return;
    node = it->second;
    if (nodes_[node].phrase_id >= 0) {
      out.push_back(PhraseMatch{i, j - i + 1,
                                CharSpan{toks[i].span.start, toks[j].span.end},
                                static_cast<size_t>(nodes_[node].phrase_id)});
    }
  }
}

std::vector<PhraseMatch> PhraseMatcher::find_all(const Sentence& sentence) const {
  std::vector<PhraseMatch> out;
  size_t i = 0;
  while (i < sentence.tokens.size()) {
    PhraseMatch m;
    if (longest_at(sentence, i, m)) {
      out.push_back(m);
      i += m.token_count;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<PhraseMatch> PhraseMatcher::find_every(const Sentence& sentence) const {
  std::vector<PhraseMatch> out;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) all_at(sentence, i, out);
  return out;
}

}  // namespace tosaudit
