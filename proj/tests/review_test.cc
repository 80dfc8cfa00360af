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

#include <gtest/gtest.h>

#include "test_support.h"
#include "tosaudit/corpus.h"
#include "tosaudit/error.h"

namespace tosaudit {
namespace {

SentenceFinding make(const std::string& platform, Detector d, const std::string& label,
                     size_t sentence) {
  SentenceFinding f;
  f.platform = platform;
  f.sentence_index = sentence;
  f.detector = d;
  f.auto_label = label;
  f.evidence_span = {sentence * 100, sentence * 100 + 10};
  f.sentence_text = "Sentence " + std::to_string(sentence) + ".";
  return f;
}

// Data types, entities and specific-sharing sentences for one platform.
std::vector<SentenceFinding> platform_findings(const std::string& platform, size_t dt,
                                               size_t en, size_t ss) {
  std::vector<SentenceFinding> out;
  size_t sentence = 0;
  for (size_t i = 0; i < dt; ++i) {
    out.push_back(make(platform, Detector::kDataType, "type" + std::to_string(i), sentence++));
  }
  for (size_t i = 0; i < en; ++i) {
    out.push_back(make(platform, Detector::kEntity, "Entity" + std::to_string(i), sentence++));
  }
  for (size_t i = 0; i < ss; ++i) {
    out.push_back(make(platform, Detector::kSharing, "specific", sentence++));
  }
  return out;
}

TEST(ReviewExportTest, OnlyRetentionAndSharingByDefault) {
  std::vector<SentenceFinding> f = platform_findings("Bluesky", 10, 4, 5);
  EXPECT_EQ(review_records(f).size(), 5u);
  ExportOptions all;
  all.include_data_types_and_entities = true;
  EXPECT_EQ(review_records(f, all).size(), 19u);
}

TEST(ReviewFormatTest, RoundTripsThroughText) {
  std::vector<ReviewRecord> records = review_records(platform_findings("Bluesky", 0, 0, 2));
  records[0].human_label = "rejected";
  records[0].reviewer_note = "dispute window, \"not sharing\"";
  std::string text = format_review(records);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            R"({"header":"tosaudit-review","schema_version":1})");
  std::vector<ReviewRecord> back = parse_review(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].human_label, "rejected");
  EXPECT_EQ(back[0].reviewer_note, records[0].reviewer_note);
  EXPECT_EQ(back[1].human_label, "");
  EXPECT_EQ(format_review(back), text);
}

TEST(ReviewFormatTest, MissingHeaderIsAnError) {
  EXPECT_THROW(parse_review("{\"platform\":\"X\"}\n"), Error);
  EXPECT_THROW(parse_review("not json\n"), Error);
}

TEST(ReviewApplyTest, BlueskyRevision) {
  std::vector<SentenceFinding> f = platform_findings("Bluesky", 10, 4, 5);
  std::vector<ReviewRecord> records = review_records(f);
  ASSERT_EQ(records.size(), 5u);
  for (size_t i = 0; i < 3; ++i) records[i].human_label = "rejected";
  std::vector<SentenceFinding> reviewed = apply_review_records(f, records);

  SpecificityCounts before = aggregate_counts(reviewed, ScoreStage::kAuto);
  SpecificityCounts after = aggregate_counts(reviewed, ScoreStage::kPostReview);
  EXPECT_EQ(before.ss, 5u);
  EXPECT_EQ(after.ss, 2u);
  SpecificityScores post = map_scores(after);
  EXPECT_EQ(post.s_s, 1);
  EXPECT_EQ(post.composite, 1.25);
}

TEST(ReviewApplyTest, RedditRevision) {
  std::vector<SentenceFinding> f = platform_findings("Reddit", 13, 3, 2);
  std::vector<ReviewRecord> records = review_records(f);
  for (ReviewRecord& r : records) r.human_label = "rejected";
  std::vector<SentenceFinding> reviewed = apply_review_records(f, records);
  SpecificityScores pre = map_scores(aggregate_counts(reviewed, ScoreStage::kAuto));
  SpecificityScores post = map_scores(aggregate_counts(reviewed, ScoreStage::kPostReview));
  EXPECT_EQ(pre.s_s, 1);
  EXPECT_EQ(post.s_s, 0);
  EXPECT_EQ(pre.composite, 1.25);
  EXPECT_EQ(post.composite, 1.0);
}

TEST(ReviewApplyTest, RelabelIsAllowedWithinDetector) {
  std::vector<SentenceFinding> f = platform_findings("X", 0, 0, 1);
  std::vector<ReviewRecord> records = review_records(f);
  records[0].human_label = "generic";
  std::vector<SentenceFinding> reviewed = apply_review_records(f, records);
  EXPECT_EQ(reviewed[0].effective_label(), "generic");
  SpecificityCounts c = aggregate_counts(reviewed);
  EXPECT_EQ(c.ss, 0u);
  EXPECT_EQ(c.sg, 1u);
}

TEST(ReviewApplyTest, IllegalLabelIsRejected) {
  std::vector<SentenceFinding> f = platform_findings("X", 0, 0, 1);
  std::vector<ReviewRecord> records = review_records(f);
  records[0].human_label = "explicit";
  try {
    apply_review_records(f, records);
    FAIL() << "expected illegal label";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
    EXPECT_NE(std::string(e.what()).find("illegal label"), std::string::npos);
  }
}

TEST(ReviewApplyTest, UnmatchedRecordFails) {
  std::vector<SentenceFinding> f = platform_findings("X", 0, 0, 1);
  std::vector<ReviewRecord> records = review_records(f);
  records[0].sentence_index = 99;
  try {
    apply_review_records(f, records);
    FAIL() << "expected unmatched";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnmatched);
  }
}

TEST(ReviewApplyTest, EmptyDecisionLeavesFindingUnchanged) {
  std::vector<SentenceFinding> f = platform_findings("X", 0, 0, 2);
  std::vector<SentenceFinding> reviewed = apply_review_records(f, review_records(f));
  EXPECT_EQ(reviewed, f);
}

TEST(ReviewFileTest, ExportThenApplyFromDisk) {
  testing::TempDir dir;
  std::vector<SentenceFinding> f = platform_findings("Bluesky", 10, 4, 5);
  f.push_back(make("Reddit", Detector::kSharing, "specific", 0));
  export_review(f, dir / "review.jsonl");
  std::vector<ReviewRecord> records = parse_review(read_file(dir / "review.jsonl"));
  ASSERT_EQ(records.size(), 6u);
  for (ReviewRecord& r : records) {
    if (r.platform == "Bluesky" && r.sentence_index < 17) r.human_label = "rejected";
  }
  write_file_atomic(dir / "review.jsonl", format_review(records));
  ReviewOutcome out = apply_review(f, dir / "review.jsonl");
  EXPECT_EQ(out.auto_counts["Bluesky"].ss, 5u);
  EXPECT_EQ(out.post_counts["Bluesky"].ss, 2u);
  EXPECT_EQ(out.post_scores["Bluesky"].composite, 1.25);
  EXPECT_EQ(out.post_counts["Reddit"].ss, 1u);
}

}  // namespace
}  // namespace tosaudit
