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

// Per-platform analysis results and their canonical JSON form.
//
// The JSON carries no run timestamp, so identical inputs serialize to
// identical bytes. Tables and figures are projections of this record.

#ifndef TOSAUDIT_RESULTS_JSON_H_
#define TOSAUDIT_RESULTS_JSON_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tosaudit/clarity.h"
#include "tosaudit/interface_assess.h"
#include "tosaudit/readability.h"
#include "tosaudit/specificity.h"
#include "tosaudit/textprep.h"

namespace tosaudit {

inline constexpr int kResultsSchemaVersion = 1;

struct GroupFluency {
  ReaderGroup group;
  FluencyEstimate estimate;
};

struct PlatformSpecificity {
  std::vector<SentenceFinding> findings;
  std::size_t sentence_count = 0;
  std::size_t sharing_verb_sentences = 0;
  SpecificityCounts auto_counts;
  SpecificityCounts post_counts;
  SpecificityScores auto_scores;
  SpecificityScores post_scores;
  SpecificityCoverage coverage;  // post-review

  // Recomputes counts, scores and coverage from the findings.
  void rescore();
};

struct PlatformResult {
  std::string platform;
  std::string snapshot_digest;
  std::string source_url;
  std::string retrieved_at;
  DocStats doc_stats;
  ReadabilityProfile readability;
  std::array<ReadabilityBand, 7> bands{};
  std::vector<GroupFluency> fluency;
  ClarityReport clarity;
  PlatformSpecificity specificity;
  std::optional<InterfaceAssessment> interface_assessment;
};

struct FailureRecord {
  std::string platform;
  std::string snapshot_digest;
  std::string message;
};

struct ResultSet {
  std::map<std::string, std::string> lexicon_versions;
  nlohmann::json options = nlohmann::json::object();
  std::vector<PlatformResult> results;  // platform order
  std::vector<FailureRecord> failures;  // platform order
};

nlohmann::json to_json(const PlatformResult& r);
PlatformResult platform_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ResultSet& set);
ResultSet result_set_from_json(const nlohmann::json& j);

// Two-space indented JSON plus a trailing newline.
std::string serialize_results(const ResultSet& set);
void save_results(const std::filesystem::path& path, const ResultSet& set);
ResultSet load_results(const std::filesystem::path& path);

// Every finding of every result, in result order.
std::vector<SentenceFinding> all_findings(const ResultSet& set);

// Replaces each result's findings with the given ones (matched by platform)
// and rescores.
void replace_findings(ResultSet& set, const std::vector<SentenceFinding>& findings);

}  // namespace tosaudit

#endif  // TOSAUDIT_RESULTS_JSON_H_
