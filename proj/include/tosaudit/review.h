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

// Manual review round-trip for specificity findings.
//
// The review file is JSON Lines. The first line is a header record; each
// following line is one finding:
//
//   {"header":"tosaudit-review","schema_version":1}
//   {"platform":..., "sentence_index":..., "detector":..., "evidence_span":
//    {"start":..,"end":..}, "sentence_text":..., "auto_label":...,
//    "human_label":"", "reviewer_note":""}
//
// A reviewer fills in human_label (or leaves it empty to keep the current
// label). Importing is idempotent: applying the same file twice gives the
// same findings. Later records for the same finding win.

#ifndef TOSAUDIT_REVIEW_H_
#define TOSAUDIT_REVIEW_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tosaudit/specificity.h"

namespace tosaudit {

inline constexpr int kReviewSchemaVersion = 1;

struct ReviewRecord {
  std::string platform;
  std::size_t sentence_index = 0;
  Detector detector = Detector::kRetention;
  CharSpan evidence_span;
  std::string sentence_text;
  std::string auto_label;
  std::string human_label;  // empty: no decision
  std::string reviewer_note;
};

struct ExportOptions {
  // Data-type and entity findings are not exported unless asked for.
  bool include_data_types_and_entities = false;
};

// Records in input order. DT/EN findings filtered per options.
std::vector<ReviewRecord> review_records(const std::vector<SentenceFinding>& findings,
                                         const ExportOptions& options = {});

std::string format_review(const std::vector<ReviewRecord>& records);
std::vector<ReviewRecord> parse_review(std::string_view contents);

void export_review(const std::vector<SentenceFinding>& findings,
                   const std::filesystem::path& path, const ExportOptions& options = {});

// Applies records in order. Throws kUnmatched "unmatched review record"
// when a record names no finding, and kValidation "illegal label" when a
// human label is not allowed for the finding. Text and spans never change.
std::vector<SentenceFinding> apply_review_records(std::vector<SentenceFinding> findings,
                                                  const std::vector<ReviewRecord>& records);

struct ReviewOutcome {
  std::vector<SentenceFinding> findings;
  // Per platform, before and after review.
  std::map<std::string, SpecificityCounts> auto_counts;
  std::map<std::string, SpecificityCounts> post_counts;
  std::map<std::string, SpecificityScores> auto_scores;
  std::map<std::string, SpecificityScores> post_scores;
};

ReviewOutcome apply_review(std::vector<SentenceFinding> findings,
                           const std::filesystem::path& review_file);

// Recomputes both stages for findings that may span several platforms.
void score_by_platform(const std::vector<SentenceFinding>& findings, ReviewOutcome& out);

}  // namespace tosaudit

#endif  // TOSAUDIT_REVIEW_H_
