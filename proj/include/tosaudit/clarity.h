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

// Lexical clarity: counts vague or non-committal terms in a document.
//
// Matching is case-insensitive, on word boundaries, left to right, with the
// longest lexicon phrase winning at each position ("certain information"
// beats "certain" and "information"). A multi-word match is one occurrence.
// Hyphen and space spellings are separate entries; nothing is normalized.

#ifndef TOSAUDIT_CLARITY_H_
#define TOSAUDIT_CLARITY_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tosaudit/phrase_matcher.h"
#include "tosaudit/textprep.h"

namespace tosaudit {

enum class VagueCategory { kUncertainty, kActorAmbiguity, kScopeAmbiguity, kOther };

std::string_view category_name(VagueCategory c);
VagueCategory category_from_name(std::string_view name);

struct VagueTerm {
  std::string canonical;
  std::vector<std::string> variants;
  VagueCategory category = VagueCategory::kOther;
};

struct VagueLexicon {
  std::vector<VagueTerm> terms;
  std::string version;
};

// Accepts either a JSON list of {canonical, variants, category} (version
// derived from the content digest) or {"version": ..., "terms": [...]}.
// Throws kDuplicate for a repeated surface form (after case folding) and
// kParse/kValidation for malformed or empty terms.
VagueLexicon parse_vague_lexicon(std::string_view contents);
VagueLexicon load_vague_lexicon(const std::filesystem::path& path);

struct VagueMatch {
  std::size_t sentence_index = 0;
  CharSpan span;
  std::string canonical;
  std::string surface;  // lexicon spelling that matched
  bool is_variant = false;
};

struct ClarityReport {
  std::string platform;
  std::size_t word_count = 0;
  std::size_t vague_count = 0;
  double density_pct = 0;
  std::size_t unique_terms = 0;
  std::map<std::string, std::size_t> per_term_counts;     // by canonical
  std::map<std::string, std::size_t> per_surface_counts;  // by matched form
  std::map<std::string, std::size_t> per_category_counts;
  std::vector<VagueMatch> matches;  // document order
};

struct ClarityOptions {
  // Match the "similar terms" column as well, attributed to the canonical
  // term. With false only canonical spellings count.
  bool match_variants = true;
};

class ClarityScanner {
 public:
  explicit ClarityScanner(const VagueLexicon& lexicon, ClarityOptions options = {});

  ClarityReport scan(const Document& doc) const;

 private:
  struct Surface {
    std::string text;
    std::size_t term;
    bool variant;
  };

  const VagueLexicon& lexicon_;
  PhraseMatcher matcher_;
  std::vector<Surface> surfaces_;
};

ClarityReport scan_vague_terms(const Document& doc, const VagueLexicon& lexicon,
                               ClarityOptions options = {});

// Descending by count, ties alphabetical by canonical. k must be >= 1.
std::vector<std::pair<std::string, std::size_t>> top_terms(const ClarityReport& report,
                                                           std::size_t k);

// 100 * vague / words, 0 for an empty document.
double vague_density_pct(std::size_t vague_count, std::size_t word_count);

}  // namespace tosaudit

#endif  // TOSAUDIT_CLARITY_H_
