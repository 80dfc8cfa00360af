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

#include "tosaudit/review.h"

#include <algorithm>

#include "json.hpp"
#include "tosaudit/corpus.h"
#include "tosaudit/error.h"

namespace tosaudit {

namespace {

using nlohmann::json;

constexpr std::string_view kHeaderTag = "tosaudit-review";

json record_to_json(const ReviewRecord& r) {
  json j;
  j["platform"] = r.platform;
  j["sentence_index"] = r.sentence_index;
  j["detector"] = std::string(detector_name(r.detector));
  j["evidence_span"] = {{"start", r.evidence_span.start}, {"end", r.evidence_span.end}};
  j["sentence_text"] = r.sentence_text;
  j["auto_label"] = r.auto_label;
  j["human_label"] = r.human_label;
  j["reviewer_note"] = r.reviewer_note;
  return j;
}

ReviewRecord record_from_json(const json& j) {
  ReviewRecord r;
  r.platform = j.at("platform").get<std::string>();
  r.sentence_index = j.at("sentence_index").get<std::size_t>();
  r.detector = detector_from_name(j.at("detector").get<std::string>());
  r.evidence_span.start = j.at("evidence_span").at("start").get<std::size_t>();
  r.evidence_span.end = j.at("evidence_span").at("end").get<std::size_t>();
  r.sentence_text = j.value("sentence_text", std::string());
  r.auto_label = j.value("auto_label", std::string());
  if (j.contains("human_label") && !j.at("human_label").is_null()) {
    r.human_label = j.at("human_label").get<std::string>();
  }
  if (j.contains("reviewer_note") && !j.at("reviewer_note").is_null()) {
    r.reviewer_note = j.at("reviewer_note").get<std::string>();
  }
  return r;
}

bool same_finding(const SentenceFinding& f, const ReviewRecord& r) {
  return f.platform == r.platform && f.sentence_index == r.sentence_index &&
         f.detector == r.detector && f.evidence_span == r.evidence_span;
}

}  // namespace

std::vector<ReviewRecord> review_records(const std::vector<SentenceFinding>& findings,
                                         const ExportOptions& options) {
  std::vector<ReviewRecord> out;
  for (const SentenceFinding& f : findings) {
    bool reviewable = f.detector == Detector::kRetention || f.detector == Detector::kSharing;
    if (!reviewable && !options.include_data_types_and_entities) continue;
    out.push_back(ReviewRecord{f.platform, f.sentence_index, f.detector, f.evidence_span,
                               f.sentence_text, f.auto_label, f.human_label.value_or(""),
                               f.reviewer_note});
  }
  return out;
}

std::string format_review(const std::vector<ReviewRecord>& records) {
  std::string out =
      json{{"header", kHeaderTag}, {"schema_version", kReviewSchemaVersion}}.dump() + "\n";
  for (const ReviewRecord& r : records) out += record_to_json(r).dump() + "\n";
  return out;
}

std::vector<ReviewRecord> parse_review(std::string_view contents) {
  std::vector<ReviewRecord> out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < contents.size()) {
    size_t nl = contents.find('\n', pos);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      json j = json::parse(line);
      if (j.contains("header")) {
        if (j.at("header") != kHeaderTag ||
            j.value("schema_version", 0) != kReviewSchemaVersion) {
          throw Error(ErrorCode::kParse, "unsupported review file header");
        }
        continue;
      }
      out.push_back(record_from_json(j));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "malformed review record on line " +
                                         std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void export_review(const std::vector<SentenceFinding>& findings,
                   const std::filesystem::path& path, const ExportOptions& options) {
  write_file_atomic(path, format_review(review_records(findings, options)));
}

std::vector<SentenceFinding> apply_review_records(std::vector<SentenceFinding> findings,
                                                  const std::vector<ReviewRecord>& records) {
  for (const ReviewRecord& r : records) {
    auto it = std::find_if(findings.begin(), findings.end(),
                           [&](const SentenceFinding& f) { return same_finding(f, r); });
    if (it == findings.end()) {
      throw Error(ErrorCode::kUnmatched,
                  "unmatched review record: " + r.platform + " sentence " +
                      std::to_string(r.sentence_index) + " " +
                      std::string(detector_name(r.detector)));
    }
    if (!r.human_label.empty()) {
      if (!is_legal_label(*it, r.human_label)) {
        throw Error(ErrorCode::kValidation, "illegal label \"" + r.human_label + "\" for " +
                                                std::string(detector_name(r.detector)) +
                                                " finding");
      }
      it->human_label = r.human_label;
    }
    if (!r.reviewer_note.empty()) it->reviewer_note = r.reviewer_note;
  }
  return findings;
}

void score_by_platform(const std::vector<SentenceFinding>& findings, ReviewOutcome& out) {
  std::map<std::string, std::vector<SentenceFinding>> by_platform;
  for (const SentenceFinding& f : findings) by_platform[f.platform].push_back(f);
  for (const auto& [platform, list] : by_platform) {
    out.auto_counts[platform] = aggregate_counts(list, ScoreStage::kAuto);
    out.post_counts[platform] = aggregate_counts(list, ScoreStage::kPostReview);
    out.auto_scores[platform] = map_scores(out.auto_counts[platform], ScoreStage::kAuto);
    out.post_scores[platform] =
        map_scores(out.post_counts[platform], ScoreStage::kPostReview);
  }
}

ReviewOutcome apply_review(std::vector<SentenceFinding> findings,
                           const std::filesystem::path& review_file) {
  ReviewOutcome out;
  out.findings = apply_review_records(std::move(findings), parse_review(read_file(review_file)));
  score_by_platform(out.findings, out);
  return out;
}

}  // namespace tosaudit
