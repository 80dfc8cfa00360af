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

#include "tosaudit/specificity.h"

#include <gtest/gtest.h>

#include <set>

#include "published_tables.h"
#include "test_support.h"
#include "tosaudit/error.h"

namespace tosaudit {
namespace {

class DetectorTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    detector_ =
        new SpecificityDetector(load_specificity_lexicons(testing::lexicon_dir()));
  }
  static void TearDownTestSuite() {
    delete detector_;
    detector_ = nullptr;
  }

  static Sentence first_sentence(std::string_view text) {
    std::vector<Sentence> s = segment_sentences(text);
    return s.front();
  }
  static std::set<std::string> labels(const std::vector<SentenceFinding>& findings) {
    std::set<std::string> out;
    for (const SentenceFinding& f : findings) out.insert(f.auto_label);
    return out;
  }

  static SpecificityDetector* detector_;
};

SpecificityDetector* DetectorTest::detector_ = nullptr;

//===----------------------------------------------------------------------===//
// Data types and entities
//===----------------------------------------------------------------------===//

TEST_F(DetectorTest, NamedDataTypes) {
  EXPECT_EQ(labels(detector_->detect_data_types(
                first_sentence("We collect your IP address and device ID."))),
            (std::set<std::string>{"IP address", "device ID"}));
  EXPECT_TRUE(
      detector_->detect_data_types(first_sentence("We collect some information.")).empty());
  EXPECT_EQ(labels(detector_->detect_data_types(
                first_sentence("biometric data may be processed"))),
            (std::set<std::string>{"biometric data"}));
}

TEST_F(DetectorTest, DataTypeVariantMapsToCanonical) {
  EXPECT_EQ(labels(detector_->detect_data_types(first_sentence("You upload photos here."))),
            (std::set<std::string>{"photo"}));
}

TEST_F(DetectorTest, RepeatedDataTypeInSentenceIsOneFinding) {
  EXPECT_EQ(detector_
                ->detect_data_types(
                    first_sentence("Your IP address and another IP address are logged."))
                .size(),
            1u);
}

TEST_F(DetectorTest, CorporateSuffixEntity) {
  std::vector<SentenceFinding> f =
      detector_->detect_entities(first_sentence("Meta Platforms, Inc. operates this service."));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].auto_label, "Meta Platforms, Inc.");
}

TEST_F(DetectorTest, CuratedEntityIsCaseSensitive) {
  EXPECT_EQ(labels(detector_->detect_entities(first_sentence("We use Stripe for payments."))),
            (std::set<std::string>{"Stripe"}));
  EXPECT_TRUE(
      detector_->detect_entities(first_sentence("We share data with our affiliates.")).empty());
  EXPECT_TRUE(detector_->detect_entities(first_sentence("The x axis is shown.")).empty());
}

TEST_F(DetectorTest, ArticleBeforeCompanyIsDropped) {
  std::vector<SentenceFinding> f = detector_->detect_entities(
      first_sentence("You contract with The Example Group LLC under these terms."));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].auto_label, "Example Group LLC");
}

//===----------------------------------------------------------------------===//
// Retention
//===----------------------------------------------------------------------===//

TEST_F(DetectorTest, RetentionLabels) {
  RetentionResult explicit_r =
      detector_->classify_retention(first_sentence("We retain log data for 30 days."));
  EXPECT_EQ(explicit_r.label, RetentionLabel::kExplicit);
  ASSERT_TRUE(explicit_r.finding);
  EXPECT_EQ(explicit_r.finding->auto_label, "explicit");

  EXPECT_EQ(detector_->classify_retention(first_sentence("We keep data as long as necessary."))
                .label,
            RetentionLabel::kVague);
  RetentionResult none = detector_->classify_retention(first_sentence("We value your privacy."));
  EXPECT_EQ(none.label, RetentionLabel::kNone);
  EXPECT_FALSE(none.finding);
}

TEST_F(DetectorTest, RetentionDurationForms) {
  for (const char* text :
       {"Backups are deleted within ninety (90) days.", "We store records for 12 months.",
        "Logs are kept on a 30-day cycle.", "Data is retained for two years."}) {
    EXPECT_EQ(detector_->classify_retention(first_sentence(text)).label,
              RetentionLabel::kExplicit)
        << text;
  }
}

TEST_F(DetectorTest, DurationTooFarFromVerbIsNotExplicit) {
  EXPECT_EQ(detector_
                ->classify_retention(first_sentence(
                    "We retain the information you give us when you sign up, post, comment, "
                    "message friends or browse for about 30 days."))
                .label,
            RetentionLabel::kNone);
}

TEST_F(DetectorTest, FindDurations) {
  std::vector<Duration> d = find_durations(first_sentence("Wait 30 days or thirty days."));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_TRUE(find_durations(first_sentence("Section 30 applies.")).empty());
}

//===----------------------------------------------------------------------===//
// Sharing
//===----------------------------------------------------------------------===//

TEST_F(DetectorTest, SharingLabels) {
  EXPECT_EQ(detector_
                ->classify_sharing(first_sentence(
                    "We share transaction data with merchants for fraud detection."))
                .label,
            SharingLabel::kSpecific);
  EXPECT_EQ(
      detector_->classify_sharing(first_sentence("We use your data to provide our services."))
          .label,
      SharingLabel::kGeneric);
  SharingResult neg = detector_->classify_sharing(
      first_sentence("We do not share personally identifiable information."));
  EXPECT_EQ(neg.label, SharingLabel::kNegated);
  ASSERT_EQ(neg.findings.size(), 1u);
  EXPECT_EQ(neg.findings[0].auto_label, "negated");
}

TEST_F(DetectorTest, NoSharingVerbMeansNoFinding) {
  SharingResult r = detector_->classify_sharing(first_sentence("Fraud detection matters."));
  EXPECT_EQ(r.label, SharingLabel::kNone);
  EXPECT_FALSE(r.has_sharing_verb);
  EXPECT_TRUE(r.findings.empty());
}

TEST_F(DetectorTest, SpecificAndGenericCuesGiveTwoFindings) {
  SharingResult r = detector_->classify_sharing(first_sentence(
      "We use data for fraud detection and to provide our services."));
  EXPECT_EQ(r.label, SharingLabel::kSpecific);
  EXPECT_EQ(r.findings.size(), 2u);
}

//===----------------------------------------------------------------------===//
// Aggregation and scoring
//===----------------------------------------------------------------------===//

SentenceFinding finding(Detector d, std::string label, size_t sentence = 0,
                        std::string platform = "X") {
  SentenceFinding f;
  f.platform = std::move(platform);
  f.sentence_index = sentence;
  f.detector = d;
  f.auto_label = std::move(label);
  return f;
}

TEST(AggregateTest, DistinctDataTypes) {
  std::vector<SentenceFinding> f = {finding(Detector::kDataType, "IP address", 0),
                                    finding(Detector::kDataType, "device ID", 0),
                                    finding(Detector::kDataType, "IP address", 3)};
  EXPECT_EQ(aggregate_counts(f).dt, 2u);
}

TEST(AggregateTest, SharingCountsSentencesByStrongestLabel) {
  std::vector<SentenceFinding> f = {finding(Detector::kSharing, "specific", 1),
                                    finding(Detector::kSharing, "generic", 1),
                                    finding(Detector::kSharing, "generic", 2),
                                    finding(Detector::kSharing, "negated", 3)};
  SpecificityCounts c = aggregate_counts(f);
  EXPECT_EQ(c.ss, 1u);
  EXPECT_EQ(c.sg, 1u);
}

TEST(AggregateTest, ReviewedLabelsReplaceAutomaticOnes) {
  std::vector<SentenceFinding> f = {finding(Detector::kSharing, "specific", 1),
                                    finding(Detector::kRetention, "explicit", 2)};
  f[0].human_label = "rejected";
  f[1].human_label = "vague";
  EXPECT_EQ(aggregate_counts(f, ScoreStage::kAuto).ss, 1u);
  SpecificityCounts post = aggregate_counts(f, ScoreStage::kPostReview);
  EXPECT_EQ(post.ss, 0u);
  EXPECT_EQ(post.re_explicit, 0u);
  EXPECT_EQ(post.re_vague, 1u);
}

TEST(AggregateTest, MixedPlatformsAreRejected) {
  std::vector<SentenceFinding> f = {finding(Detector::kDataType, "email", 0, "X"),
                                    finding(Detector::kDataType, "email", 0, "Meta")};
  EXPECT_THROW(aggregate_counts(f), Error);
}

TEST(MapScoresTest, ThresholdEdges) {
  EXPECT_EQ(map_scores({0, 0, 0, 0, 0, 0}).composite, 0.0);
  SpecificityScores s = map_scores({3, 2, 0, 1, 0, 2});
  EXPECT_EQ(s.dt_s, 1);
  EXPECT_EQ(s.en_s, 1);
  EXPECT_EQ(s.r_s, 1);
  EXPECT_EQ(s.s_s, 1);
  s = map_scores({4, 3, 1, 0, 0, 3});
  EXPECT_EQ(s.dt_s, 2);
  EXPECT_EQ(s.en_s, 2);
  EXPECT_EQ(s.r_s, 2);
  EXPECT_EQ(s.s_s, 2);
  EXPECT_EQ(s.composite, 2.0);
  EXPECT_EQ(map_scores({0, 0, 0, 0, 1, 0}).s_s, 1);
}

TEST(MapScoresTest, WhatsAppCounts) {
  SpecificityScores s = map_scores({13, 5, 2, 0, 1, 4});
  EXPECT_EQ((std::array<int, 4>{s.dt_s, s.en_s, s.r_s, s.s_s}),
            (std::array<int, 4>{2, 2, 2, 2}));
  EXPECT_EQ(s.composite, 2.0);
}

TEST(MapScoresTest, PublishedRowsReproduceExactly) {
  for (const testing::PublishedSpecificity& row : testing::kPublishedSpecificity) {
    SpecificityScores s = map_scores({row.dt, row.en, row.re, 0, row.sg, row.ss});
    EXPECT_EQ((std::array<int, 4>{s.dt_s, s.en_s, s.r_s, s.s_s}), row.sub) << row.platform;
    EXPECT_EQ(s.composite, row.composite) << row.platform;
  }
}

TEST(MapScoresTest, ScoresStayInRange) {
  for (size_t dt = 0; dt < 20; dt += 3) {
    for (size_t ss = 0; ss < 6; ++ss) {
      for (size_t sg = 0; sg < 3; ++sg) {
        SpecificityScores s = map_scores({dt, dt / 2, ss % 2, sg % 2, sg, ss});
        for (int v : {s.dt_s, s.en_s, s.r_s, s.s_s}) {
          EXPECT_GE(v, 0);
          EXPECT_LE(v, 2);
        }
        EXPECT_DOUBLE_EQ(s.composite, (s.dt_s + s.en_s + s.r_s + s.s_s) / 4.0);
      }
    }
  }
}

TEST(LabelTest, LegalLabelsPerDetector) {
  SentenceFinding r = finding(Detector::kRetention, "explicit");
  EXPECT_TRUE(is_legal_label(r, "vague"));
  EXPECT_TRUE(is_legal_label(r, "rejected"));
  EXPECT_FALSE(is_legal_label(r, "specific"));
  SentenceFinding d = finding(Detector::kDataType, "email");
  EXPECT_TRUE(is_legal_label(d, "email"));
  EXPECT_FALSE(is_legal_label(d, "phone"));
}

//===----------------------------------------------------------------------===//
// Whole documents
//===----------------------------------------------------------------------===//

TEST_F(DetectorTest, AnalyzeDocumentCollectsAllDetectors) {
  Document doc = build_document(
      "Meta",
      "We collect your email address and location. Meta Platforms, Inc. provides the "
      "service. We retain log data for 30 days. We share data with businesses for fraud "
      "detection.");
  DocumentSpecificity ds = analyze_specificity(doc, *detector_);
  EXPECT_EQ(ds.sentence_count, 4u);
  EXPECT_EQ(ds.sharing_verb_sentences, 1u);
  SpecificityCounts c = aggregate_counts(ds.findings);
  EXPECT_EQ(c.dt, 3u);  // email address, location, log data
  EXPECT_EQ(c.en, 1u);
  EXPECT_EQ(c.re_explicit, 1u);
  EXPECT_EQ(c.ss, 1u);
  for (const SentenceFinding& f : ds.findings) {
    EXPECT_EQ(f.platform, "Meta");
    const Sentence& s = doc.sentences[f.sentence_index];
    EXPECT_TRUE(s.span.contains(f.evidence_span));
  }
  SpecificityCoverage cov = compute_coverage(ds);
  EXPECT_DOUBLE_EQ(cov.purpose_sentence_pct, 100.0);
}

TEST(LexiconValidationTest, EmptyListIsRejected) {
  SpecificityLexicons lex = load_specificity_lexicons(testing::lexicon_dir());
  lex.negation_cues.clear();
  EXPECT_THROW(lex.validate(), Error);
}

}  // namespace
}  // namespace tosaudit
