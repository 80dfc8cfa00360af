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

// Interface-design assessment records.
//
// The five scores are assigned by a person. This module checks the record
// (ranges, evidence for every nonzero score, verbatim excerpts), stores it
// without silent overwrites, lines up cross-platform tables, and can point
// the assessor at sentences that mention relevant cues. It never scores.

#ifndef TOSAUDIT_INTERFACE_ASSESS_H_
#define TOSAUDIT_INTERFACE_ASSESS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tosaudit/textprep.h"

namespace tosaudit {

enum class InterfaceMetric {
  kUntickedCheckbox,
  kReviewBeforeConsent,
  kSeparateConsentSteps,
  kExplicitDenial,
  kReversibilityCue,
};

// Table column order.
inline constexpr std::array<InterfaceMetric, 5> kAllInterfaceMetrics = {
    InterfaceMetric::kUntickedCheckbox, InterfaceMetric::kReviewBeforeConsent,
    InterfaceMetric::kSeparateConsentSteps, InterfaceMetric::kExplicitDenial,
    InterfaceMetric::kReversibilityCue};

std::string_view interface_metric_key(InterfaceMetric m);  // "unticked_checkbox"
bool interface_metric_from_key(std::string_view key, InterfaceMetric& out);
int max_score(InterfaceMetric m);  // 1, 1, 2, 2, 2

struct EvidenceRecord {
  std::string metric;   // a metric key; validated
  std::string excerpt;  // verbatim quote from the document
  std::size_t sentence_index = 0;

  friend bool operator==(const EvidenceRecord&, const EvidenceRecord&) = default;
};

struct InterfaceAssessment {
  std::string platform;
  int unticked_checkbox = 0;
  int review_before_consent = 0;
  int separate_consent_steps = 0;
  int explicit_denial = 0;
  int reversibility_cue = 0;
  std::vector<EvidenceRecord> evidence;
  std::string assessor;
  std::string assessed_at;

  int score(InterfaceMetric m) const;

  friend bool operator==(const InterfaceAssessment&, const InterfaceAssessment&) = default;
};

nlohmann::json to_json(const InterfaceAssessment& a);
InterfaceAssessment assessment_from_json(const nlohmann::json& j);
InterfaceAssessment load_assessment(const std::filesystem::path& path);

// Every *.json file in dir, in platform order.
std::vector<InterfaceAssessment> load_assessments(const std::filesystem::path& dir);

// Lists every violation; empty means valid. With a document, excerpts must
// occur in it (whitespace runs compared as one space) and sentence indexes
// must exist. Messages contain "out of range" or "missing evidence" for the
// two schema rules.
std::vector<std::string> validate_assessment(const InterfaceAssessment& a,
                                             const Document* doc = nullptr);

// Throws kValidation carrying all issues, one per line.
void require_valid(const InterfaceAssessment& a, const Document* doc = nullptr);

// Writes dir/<platform>.json after validation. An existing record is only
// replaced with overwrite set; otherwise kDuplicate.
std::filesystem::path store_assessment(const std::filesystem::path& dir,
                                       const InterfaceAssessment& a, bool overwrite);

// Per-metric cue phrases, keyed by metric key.
struct CueLexicon {
  std::map<std::string, std::vector<std::string>> cues;
  std::string version;
};

// {"version": ..., "cues": {metric_key: [phrase, ...]}}. Every metric needs
// at least one phrase; unknown keys are rejected.
CueLexicon parse_cue_lexicon(const nlohmann::json& j);
CueLexicon load_cue_lexicon(const std::filesystem::path& path);

struct EvidenceCandidate {
  std::size_t sentence_index = 0;
  std::size_t cue_count = 0;
  std::vector<std::string> cues;  // lexicon phrases, in match order
  std::string sentence_text;
};

// Keys are all five metric keys. Candidates rank by cue count, then by
// sentence position.
std::map<std::string, std::vector<EvidenceCandidate>> suggest_evidence(
    const Document& doc, const CueLexicon& lexicon);

struct InterfaceRow {
  std::string platform;
  std::array<int, 5> scores{};  // kAllInterfaceMetrics order
};

// Rows in platform order, scores copied unchanged. Throws kDuplicate
// "duplicate platform" when a platform appears twice.
std::vector<InterfaceRow> aggregate_interface(
    const std::vector<InterfaceAssessment>& assessments);

}  // namespace tosaudit

#endif  // TOSAUDIT_INTERFACE_ASSESS_H_
