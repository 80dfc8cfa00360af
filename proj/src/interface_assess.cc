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

#include <algorithm>
#include <set>

#include "tosaudit/corpus.h"
#include "tosaudit/error.h"
#include "tosaudit/phrase_matcher.h"
#include "tosaudit/platform_order.h"
#include "tosaudit/unicode.h"

namespace tosaudit {

namespace {

using nlohmann::json;

std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (is_space_byte(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

int read_score(const json& j, std::string_view key) {
  const json& v = j.at(std::string(key));
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string(key) + " must be an integer");
  }
  return v.get<int>();
}

}  // namespace

std::string_view interface_metric_key(InterfaceMetric m) {
  switch (m) {
    case InterfaceMetric::kUntickedCheckbox: return "unticked_checkbox";
    case InterfaceMetric::kReviewBeforeConsent: return "review_before_consent";
    case InterfaceMetric::kSeparateConsentSteps: return "separate_consent_steps";
    case InterfaceMetric::kExplicitDenial: return "explicit_denial";
    case InterfaceMetric::kReversibilityCue: return "reversibility_cue";
  }
  return "";
}

bool interface_metric_from_key(std::string_view key, InterfaceMetric& out) {
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    if (interface_metric_key(m) == key) {
      out = m;
      return true;
    }
  }
  return false;
}

int max_score(InterfaceMetric m) {
  switch (m) {
    case InterfaceMetric::kUntickedCheckbox:
    case InterfaceMetric::kReviewBeforeConsent:
      return 1;
    default:
      return 2;
  }
}

int InterfaceAssessment::score(InterfaceMetric m) const {
  switch (m) {
    case InterfaceMetric::kUntickedCheckbox: return unticked_checkbox;
    case InterfaceMetric::kReviewBeforeConsent: return review_before_consent;
    case InterfaceMetric::kSeparateConsentSteps: return separate_consent_steps;
    case InterfaceMetric::kExplicitDenial: return explicit_denial;
    case InterfaceMetric::kReversibilityCue: return reversibility_cue;
  }
  return 0;
}

json to_json(const InterfaceAssessment& a) {
  json j;
  j["platform"] = a.platform;
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    j[std::string(interface_metric_key(m))] = a.score(m);
  }
  json evidence = json::array();
  for (const EvidenceRecord& e : a.evidence) {
    evidence.push_back(
        {{"metric", e.metric}, {"excerpt", e.excerpt}, {"sentence_index", e.sentence_index}});
  }
  j["evidence"] = std::move(evidence);
  j["assessor"] = a.assessor;
  j["assessed_at"] = a.assessed_at;
  return j;
}

InterfaceAssessment assessment_from_json(const json& j) {
  InterfaceAssessment a;
  try {
    a.platform = j.at("platform").get<std::string>();
    a.unticked_checkbox = read_score(j, "unticked_checkbox");
    a.review_before_consent = read_score(j, "review_before_consent");
    a.separate_consent_steps = read_score(j, "separate_consent_steps");
    a.explicit_denial = read_score(j, "explicit_denial");
    a.reversibility_cue = read_score(j, "reversibility_cue");
    if (j.contains("evidence")) {
      for (const json& e : j.at("evidence")) {
        a.evidence.push_back(EvidenceRecord{e.at("metric").get<std::string>(),
                                            e.at("excerpt").get<std::string>(),
                                            e.value("sentence_index", std::size_t{0})});
      }
    }
    a.assessor = j.value("assessor", std::string());
    a.assessed_at = j.value("assessed_at", std::string());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed assessment: ") + e.what());
  }
  return a;
}

InterfaceAssessment load_assessment(const std::filesystem::path& path) {
  try {
    return assessment_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed assessment " + path.string() + ": " + e.what());
  }
}

std::vector<InterfaceAssessment> load_assessments(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kNotFound, "assessment directory not found: " + dir.string());
  }
  std::vector<InterfaceAssessment> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(load_assessment(entry.path()));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return platform_less(a.platform, b.platform);
  });
  return out;
}

std::vector<std::string> validate_assessment(const InterfaceAssessment& a,
                                             const Document* doc) {
  std::vector<std::string> issues;
  if (!is_valid_platform_id(a.platform)) {
    issues.push_back("platform: invalid identifier \"" + a.platform + "\"");
  }
  std::set<std::string> evidenced;
  std::string doc_text = doc ? collapse_spaces(doc->text) : std::string();
  for (size_t i = 0; i < a.evidence.size(); ++i) {
    const EvidenceRecord& e = a.evidence[i];
    std::string where = "evidence " + std::to_string(i);
    InterfaceMetric m;
    if (!interface_metric_from_key(e.metric, m)) {
      issues.push_back(where + ": unknown metric \"" + e.metric + "\"");
      continue;
    }
    std::string excerpt = collapse_spaces(e.excerpt);
    if (excerpt.empty()) {
      issues.push_back(where + ": empty excerpt");
      continue;
    }
    if (doc) {
      if (e.sentence_index >= doc->sentences.size()) {
        issues.push_back(where + ": sentence_index " + std::to_string(e.sentence_index) +
                         " does not exist");
      }
      if (doc_text.find(excerpt) == std::string::npos) {
        issues.push_back(where + ": excerpt is not a verbatim quote of the document");
        continue;
      }
    }
    evidenced.insert(e.metric);
  }
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    std::string key(interface_metric_key(m));
    int s = a.score(m);
    if (s < 0 || s > max_score(m)) {
      issues.push_back(key + ": score " + std::to_string(s) + " out of range 0.." +
                       std::to_string(max_score(m)));
    } else if (s > 0 && !evidenced.contains(key)) {
      issues.push_back(key + ": missing evidence for nonzero score");
    }
  }
  return issues;
}

void require_valid(const InterfaceAssessment& a, const Document* doc) {
  std::vector<std::string> issues = validate_assessment(a, doc);
  if (issues.empty()) return;
  std::string msg = "invalid assessment for " + a.platform + ":";
  for (const std::string& i : issues) msg += "\n  " + i;
  throw Error(ErrorCode::kValidation, msg);
}

std::filesystem::path store_assessment(const std::filesystem::path& dir,
                                       const InterfaceAssessment& a, bool overwrite) {
  require_valid(a);
  std::filesystem::path path = dir / (a.platform + ".json");
  if (!overwrite && std::filesystem::exists(path)) {
    throw Error(ErrorCode::kDuplicate,
                "assessment for " + a.platform + " already exists (use overwrite)");
  }
  std::filesystem::create_directories(dir);
  write_file_atomic(path, to_json(a).dump(2) + "\n");
  return path;
}

CueLexicon parse_cue_lexicon(const json& j) {
  CueLexicon lex;
  try {
    lex.version = j.value("version", std::string("unversioned"));
    for (const auto& [key, list] : j.at("cues").items()) {
      InterfaceMetric m;
      if (!interface_metric_from_key(key, m)) {
        throw Error(ErrorCode::kValidation, "cue lexicon: unknown metric \"" + key + "\"");
      }
      lex.cues[key] = list.get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed cue lexicon: ") + e.what());
  }
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    std::string key(interface_metric_key(m));
    if (lex.cues[key].empty()) {
      throw Error(ErrorCode::kValidation, "cue lexicon: no cues for " + key);
    }
    PhraseMatcher check;  // rejects duplicates and wordless phrases
    for (size_t i = 0; i < lex.cues[key].size(); ++i) check.add(lex.cues[key][i], i);
  }
  return lex;
}

CueLexicon load_cue_lexicon(const std::filesystem::path& path) {
  try {
    return parse_cue_lexicon(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed cue lexicon " + path.string() + ": " + e.what());
  }
}

std::map<std::string, std::vector<EvidenceCandidate>> suggest_evidence(
    const Document& doc, const CueLexicon& lexicon) {
  std::map<std::string, std::vector<EvidenceCandidate>> out;
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    std::string key(interface_metric_key(m));
    std::vector<EvidenceCandidate>& list = out[key];
    auto it = lexicon.cues.find(key);
    if (it == lexicon.cues.end()) continue;
    PhraseMatcher matcher;
    for (size_t i = 0; i < it->second.size(); ++i) matcher.add(it->second[i], i);
    for (const Sentence& s : doc.sentences) {
      std::vector<PhraseMatch> hits = matcher.find_all(s);
      if (hits.empty()) continue;
      EvidenceCandidate c;
      c.sentence_index = s.index;
      c.cue_count = hits.size();
      for (const PhraseMatch& h : hits) c.cues.push_back(it->second[h.phrase_id]);
      c.sentence_text = s.text;
      list.push_back(std::move(c));
    }
    std::stable_sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      if (a.cue_count != b.cue_count) return a.cue_count > b.cue_count;
      return a.sentence_index < b.sentence_index;
    });
  }
  return out;
}

std::vector<InterfaceRow> aggregate_interface(
    const std::vector<InterfaceAssessment>& assessments) {
  std::vector<InterfaceRow> rows;
  std::set<std::string> seen;
  for (const InterfaceAssessment& a : assessments) {
    if (!seen.insert(a.platform).second) {
      throw Error(ErrorCode::kDuplicate, "duplicate platform: " + a.platform);
    }
    InterfaceRow row;
    row.platform = a.platform;
    for (size_t i = 0; i < kAllInterfaceMetrics.size(); ++i) {
      row.scores[i] = a.score(kAllInterfaceMetrics[i]);
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const InterfaceRow& a, const InterfaceRow& b) {
    return platform_less(a.platform, b.platform);
  });
  return rows;
}

}  // namespace tosaudit
