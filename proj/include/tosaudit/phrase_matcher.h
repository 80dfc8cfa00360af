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

#ifndef TOSAUDIT_PHRASE_MATCHER_H_
#define TOSAUDIT_PHRASE_MATCHER_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tosaudit/textprep.h"

namespace tosaudit {

struct PhraseMatch {
  std::size_t first_token = 0;  // index into Sentence::tokens
  std::size_t token_count = 0;
  CharSpan span;                // document offsets
  std::size_t phrase_id = 0;
};

// Token-trie over multi-word phrases. Phrases and text are tokenized the
// same way, so matches always fall on word boundaries: "third-party" never
// matches inside "third-party-owned", and "may" never matches "mayor".
// The separator between two phrase tokens must appear in the text as
// written, with any run of whitespace equal to any other.
class PhraseMatcher {
 public:
  enum class CaseMode { kInsensitive, kSensitive };

  explicit PhraseMatcher(CaseMode mode = CaseMode::kInsensitive) : mode_(mode) {
    nodes_.emplace_back();
  }

  // Throws Error(kDuplicate) if the phrase is already present and
  // Error(kInvalidArgument) if it has no word token.
  void add(std::string_view phrase, std::size_t phrase_id);
  bool contains(std::string_view phrase) const;
  std::size_t size() const { return phrase_count_; }

  // Leftmost-longest, non-overlapping scan.
  std::vector<PhraseMatch> find_all(const Sentence& sentence) const;

  // Every phrase occurrence, overlapping ones included.
  std::vector<PhraseMatch> find_every(const Sentence& sentence) const;

 private:
  struct Node {
    std::map<std::string, std::size_t, std::less<>> next;
    long phrase_id = -1;
  };

  std::vector<std::string> edge_keys(std::string_view phrase) const;
  std::string token_key(std::string_view token) const;
  // Longest match starting at token `i`, if any.
  bool longest_at(const Sentence& s, std::size_t i, PhraseMatch& out) const;
  void all_at(const Sentence& s, std::size_t i, std::vector<PhraseMatch>& out) const;

  CaseMode mode_;
  std::vector<Node> nodes_;
  std::size_t phrase_count_ = 0;
};

// Whitespace runs collapsed to one space, other characters verbatim.
std::string normalize_gap(std::string_view gap);

}  // namespace tosaudit

#endif  // TOSAUDIT_PHRASE_MATCHER_H_
