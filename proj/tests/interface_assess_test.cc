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

#include "tosaudit/interface_assess.h"

#include <gtest/gtest.h>

#include "published_tables.h"
#include "test_support.h"
#include "tosaudit/error.h"

namespace tosaudit {
namespace {

bool has_issue(const std::vector<std::string>& issues, std::string_view needle) {
  for (const std::string& i : issues) {
    if (i.find(needle) != std::string::npos) return true;
  }
  return false;
}

InterfaceAssessment typical(const std::string& platform) {
  InterfaceAssessment a;
  a.platform = platform;
  a.explicit_denial = 1;
  a.reversibility_cue = 1;
  a.evidence = {{"explicit_denial", "If you do not agree, do not use the service.", 1},
                {"reversibility_cue", "You may delete your account at any time.", 2}};
  a.assessor = "reviewer-1";
  a.assessed_at = "2025-03-10T12:00:00Z";
  return a;
}

const char* const kDocText =
    "By using the service you agree to these terms. If you do not agree, do not use "
    "the service. You may delete your account at any time.";

TEST(ValidateAssessmentTest, TypicalRowIsValid) {
  EXPECT_TRUE(validate_assessment(typical("X")).empty());
  Document doc = build_document("X", kDocText);
  EXPECT_TRUE(validate_assessment(typical("X"), &doc).empty());
}

TEST(ValidateAssessmentTest, ScoreAboveMaximumIsOutOfRange) {
  InterfaceAssessment a = typical("X");
  a.separate_consent_steps = 3;
  EXPECT_TRUE(has_issue(validate_assessment(a), "out of range"));
  a.separate_consent_steps = 0;
  a.unticked_checkbox = 2;
  EXPECT_TRUE(has_issue(validate_assessment(a), "out of range"));
  a.unticked_checkbox = -1;
  EXPECT_TRUE(has_issue(validate_assessment(a), "out of range"));
}

TEST(ValidateAssessmentTest, NonzeroScoreNeedsEvidence) {
  InterfaceAssessment a = typical("X");
  a.evidence.pop_back();
  EXPECT_TRUE(has_issue(validate_assessment(a), "missing evidence"));
  EXPECT_THROW(require_valid(a), Error);
}

TEST(ValidateAssessmentTest, EvidenceMustQuoteTheDocument) {
  InterfaceAssessment a = typical("X");
  a.evidence[1].excerpt = "You can always undo everything.";
  Document doc = build_document("X", kDocText);
  std::vector<std::string> issues = validate_assessment(a, &doc);
  EXPECT_TRUE(has_issue(issues, "verbatim"));
  EXPECT_TRUE(has_issue(issues, "missing evidence"));
}

TEST(ValidateAssessmentTest, UnknownMetricAndBadSentence) {
  InterfaceAssessment a = typical("X");
  a.evidence.push_back({"dark_pattern", "x", 0});
  a.evidence.push_back({"explicit_denial", "do not use", 40});
  Document doc = build_document("X", kDocText);
  std::vector<std::string> issues = validate_assessment(a, &doc);
  EXPECT_TRUE(has_issue(issues, "unknown metric"));
  EXPECT_TRUE(has_issue(issues, "does not exist"));
}

TEST(AssessmentJsonTest, RoundTrip) {
  InterfaceAssessment a = typical("Meta");
  EXPECT_EQ(assessment_from_json(to_json(a)), a);
  nlohmann::json j = to_json(a);
  j["explicit_denial"] = 1.5;
  EXPECT_THROW(assessment_from_json(j), Error);
}

TEST(AssessmentStoreTest, RefusesOverwriteUnlessAsked) {
  testing::TempDir dir;
  std::filesystem::path p = store_assessment(dir.path(), typical("X"), false);
  EXPECT_EQ(p.filename(), "X.json");
  EXPECT_EQ(load_assessment(p), typical("X"));
  EXPECT_THROW(store_assessment(dir.path(), typical("X"), false), Error);
  InterfaceAssessment changed = typical("X");
  changed.assessor = "reviewer-2";
  store_assessment(dir.path(), changed, true);
  EXPECT_EQ(load_assessments(dir.path()).at(0).assessor, "reviewer-2");
}

TEST(AssessmentStoreTest, InvalidAssessmentIsNotStored) {
  testing::TempDir dir;
  InterfaceAssessment a = typical("X");
  a.reversibility_cue = 5;
  EXPECT_THROW(store_assessment(dir.path(), a, false), Error);
  EXPECT_FALSE(std::filesystem::exists(dir / "X.json"));
}

//===----------------------------------------------------------------------===//
// Evidence suggestions
//===----------------------------------------------------------------------===//

TEST(SuggestEvidenceTest, CuesPointAtSentences) {
  CueLexicon cues = load_cue_lexicon(testing::lexicon_dir() / "interface_cues.json");
  Document doc = build_document("X", kDocText);
  std::map<std::string, std::vector<EvidenceCandidate>> s = suggest_evidence(doc, cues);
  ASSERT_EQ(s.size(), 5u);
  ASSERT_FALSE(s["reversibility_cue"].empty());
  EXPECT_EQ(s["reversibility_cue"][0].sentence_text, "You may delete your account at any time.");
  ASSERT_FALSE(s["unticked_checkbox"].empty());
  EXPECT_EQ(s["unticked_checkbox"][0].sentence_index, 0u);
  EXPECT_TRUE(s["separate_consent_steps"].empty());
}

//===----------------------------------------------------------------------===//
// Aggregation
//===----------------------------------------------------------------------===//

TEST(AggregateInterfaceTest, SortedRows) {
  std::vector<InterfaceAssessment> all;
  for (const char* p : testing::kInterfacePlatforms) all.push_back(typical(p));
  std::reverse(all.begin(), all.end());
  std::vector<InterfaceRow> rows = aggregate_interface(all);
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows.front().platform, "BlueSky");
  EXPECT_EQ(rows.back().platform, "YouTube");
  for (const InterfaceRow& r : rows) {
    EXPECT_EQ(r.scores, (std::array<int, 5>{0, 0, 0, 1, 1}));
  }
}

TEST(AggregateInterfaceTest, DuplicatePlatformIsAnError) {
  try {
    aggregate_interface({typical("X"), typical("X")});
    FAIL() << "expected duplicate";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate platform"), std::string::npos);
  }
}

}  // namespace
}  // namespace tosaudit
