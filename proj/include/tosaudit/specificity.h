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

// Specificity of disclosed data practices.
//
// Four sentence-level detectors (named data types, named entities, retention
// detail, sharing conditions) produce SentenceFindings. Findings aggregate
// into per-document counts, which a fixed rubric maps to 0-2 sub-scores and
// a composite. Retention and sharing findings are meant to be reviewed by a
// human (see review.h); counts can be taken before or after that review.

#ifndef TOSAUDIT_SPECIFICITY_H_
#define TOSAUDIT_SPECIFICITY_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tosaudit/phrase_matcher.h"
#include "tosaudit/textprep.h"

namespace tosaudit {

// A lexicon phrase plus inflected or alternate spellings that count as it.
struct LexiconEntry {
  std::string canonical;
  std::vector<std::string> variants;
  std::string group;  // data-type category; empty elsewhere

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct SpecificityLexicons {
  std::vector<LexiconEntry> data_types;
  std::vector<std::string> known_entities;      // matched case-sensitively
  std::vector<std::string> corporate_suffixes;  // matched case-sensitively
  std::vector<LexiconEntry> retention_verbs;
  std::vector<std::string> vague_retention_phrases;
  std::vector<LexiconEntry> sharing_verbs;
  std::vector<std::string> specific_purpose_cues;
  std::vector<std::string> generic_purpose_cues;
  std::vector<std::string> negation_cues;
  std::map<std::string, std::string> versions;  // family -> version

  // Throws kValidation for an empty list and kDuplicate for an entry that
  // repeats within its list after case folding.
  void validate() const;
};

// Each argument is the parsed content of one lexicon family file:
//   data_types.json  {"version", "categories": {name: [phrase | {canonical, variants}]}}
//   entities.json    {"version", "known_entities": [...], "corporate_suffixes": [...]}
//   retention.json   {"version", "verbs": [...], "vague_phrases": [...]}
//   sharing.json     {"version", "verbs": [...], "specific_purpose_cues": [...],
//                     "generic_purpose_cues": [...], "negation_cues": [...]}
SpecificityLexicons specificity_lexicons_from_json(const nlohmann::json& data_types,
                                                   const nlohmann::json& entities,
                                                   const nlohmann::json& retention,
                                                   const nlohmann::json& sharing);

// Reads the four family files above from a directory.
SpecificityLexicons load_specificity_lexicons(const std::filesystem::path& dir);

enum class Detector { kDataType, kEntity, kRetention, kSharing };

std::string_view detector_name(Detector d);  // data_type, entity, retention, sharing
Detector detector_from_name(std::string_view name);

inline constexpr std::string_view kRejected = "rejected";

struct SentenceFinding {
  std::string platform;
  std::size_t sentence_index = 0;
  Detector detector = Detector::kDataType;
  std::string auto_label;
  CharSpan evidence_span;  // document offsets, inside the sentence
  std::string sentence_text;
  std::optional<std::string> human_label;
  std::string reviewer_note;

  const std::string& effective_label() const {
    return human_label ? *human_label : auto_label;
  }
  bool rejected() const { return human_label && *human_label == kRejected; }

  friend bool operator==(const SentenceFinding&, const SentenceFinding&) = default;
};

// Labels a human may assign to a finding of this detector, including
// "rejected". Data-type and entity findings may only keep their own label.
bool is_legal_label(const SentenceFinding& finding, std::string_view label);

enum class RetentionLabel { kNone, kExplicit, kVague };
enum class SharingLabel { kNone, kSpecific, kGeneric, kNegated };

struct RetentionResult {
  RetentionLabel label = RetentionLabel::kNone;
  std::optional<SentenceFinding> finding;
};

struct SharingResult {
  SharingLabel label = SharingLabel::kNone;  // most specific
  bool has_sharing_verb = false;
  // Specific and generic cues in one sentence give two findings.
  std::vector<SentenceFinding> findings;
};

// Tokens [first, last] of a numeric duration such as "30 days",
// "thirty days", "12-month" or "ninety (90) days".
struct Duration {
  std::size_t first_token = 0;
  std::size_t last_token = 0;
};

std::vector<Duration> find_durations(const Sentence& sentence);

inline constexpr std::size_t kRetentionWindowTokens = 10;

class SpecificityDetector {
 public:
  // Validates the lexicons.
  explicit SpecificityDetector(SpecificityLexicons lexicons);

  std::vector<SentenceFinding> detect_data_types(const Sentence& s,
                                                 std::string_view platform = {}) const;
  std::vector<SentenceFinding> detect_entities(const Sentence& s,
                                               std::string_view platform = {}) const;
  RetentionResult classify_retention(const Sentence& s,
                                     std::string_view platform = {}) const;
  SharingResult classify_sharing(const Sentence& s, std::string_view platform = {}) const;

  const SpecificityLexicons& lexicons() const { return lexicons_; }

 private:
  std::vector<SentenceFinding> suffix_entities(const Sentence& s,
                                               std::string_view platform) const;

  SpecificityLexicons lexicons_;
  PhraseMatcher data_types_;
  PhraseMatcher entities_{PhraseMatcher::CaseMode::kSensitive};
  std::unordered_set<std::string> suffixes_;
  PhraseMatcher retention_verbs_;
  PhraseMatcher vague_retention_;
  PhraseMatcher sharing_verbs_;
  PhraseMatcher specific_cues_;
  PhraseMatcher generic_cues_;
  PhraseMatcher negation_cues_;
};

// All findings for one document plus the denominators needed for coverage.
struct DocumentSpecificity {
  std::string platform;
  std::vector<SentenceFinding> findings;  // sentence order, then detector
  std::size_t sentence_count = 0;
  std::size_t sharing_verb_sentences = 0;
};

DocumentSpecificity analyze_specificity(const Document& doc,
                                        const SpecificityDetector& detector);

enum class ScoreStage { kAuto, kPostReview };

std::string_view stage_name(ScoreStage s);  // auto, post_review

struct SpecificityCounts {
  std::size_t dt = 0;
  std::size_t en = 0;
  std::size_t re_explicit = 0;
  std::size_t re_vague = 0;
  std::size_t sg = 0;
  std::size_t ss = 0;

  friend bool operator==(const SpecificityCounts&, const SpecificityCounts&) = default;
};

// kAuto counts auto labels of every finding. kPostReview counts effective
// labels and skips rejected findings. DT/EN are distinct case-folded labels.
// Retention and sharing count sentences under their most specific label;
// negated sharing never counts. Throws kInvalidArgument when findings come
// from more than one platform.
SpecificityCounts aggregate_counts(const std::vector<SentenceFinding>& findings,
                                   ScoreStage stage = ScoreStage::kPostReview);

struct SpecificityScores {
  int dt_s = 0;
  int en_s = 0;
  int r_s = 0;
  int s_s = 0;
  double composite = 0;
  ScoreStage stage = ScoreStage::kAuto;

  friend bool operator==(const SpecificityScores&, const SpecificityScores&) = default;
};

//   dt_s  0 none, 1 for 1-3, 2 for >= 4
//   en_s  0 none, 1 for 1-2, 2 for >= 3
//   r_s   2 any explicit, 1 any vague, else 0
//   s_s   2 for SS >= 3, 1 for SS 1-2 or (SS 0 and SG >= 1), else 0
SpecificityScores map_scores(const SpecificityCounts& counts,
                             ScoreStage stage = ScoreStage::kPostReview);

// Sentence-coverage diagnostics. Reported alongside, never scored.
struct SpecificityCoverage {
  double data_type_sentence_pct = 0;
  double entity_sentence_pct = 0;
  double purpose_sentence_pct = 0;  // of sharing-verb sentences
};

SpecificityCoverage compute_coverage(const DocumentSpecificity& doc,
                                     ScoreStage stage = ScoreStage::kPostReview);

}  // namespace tosaudit

#endif  // TOSAUDIT_SPECIFICITY_H_
