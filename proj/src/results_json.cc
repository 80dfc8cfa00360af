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

#include "tosaudit/results_json.h"

#include "tosaudit/corpus.h"
#include "tosaudit/error.h"

namespace tosaudit {

namespace {

using nlohmann::json;

json span_json(CharSpan s) { return {{"start", s.start}, {"end", s.end}}; }

CharSpan span_from(const json& j) {
  return CharSpan{j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
}

json stats_json(const DocStats& s) {
  return {{"word_count", s.word_count},
          {"sentence_count", s.sentence_count},
          {"syllable_count", s.syllable_count},
          {"letter_count", s.letter_count},
          {"character_count", s.character_count},
          {"complex_word_count", s.complex_word_count},
          {"polysyllable_count", s.polysyllable_count},
          {"easy_word_count", s.easy_word_count},
          {"hard_word_count", s.hard_word_count},
          {"letters_per_100_words", s.letters_per_100_words},
          {"sentences_per_100_words", s.sentences_per_100_words},
          {"degenerate", s.degenerate}};
}

DocStats stats_from(const json& j) {
  DocStats s;
  s.word_count = j.at("word_count");
  s.sentence_count = j.at("sentence_count");
  s.syllable_count = j.at("syllable_count");
  s.letter_count = j.at("letter_count");
  s.character_count = j.at("character_count");
  s.complex_word_count = j.at("complex_word_count");
  s.polysyllable_count = j.at("polysyllable_count");
  s.easy_word_count = j.at("easy_word_count");
  s.hard_word_count = j.at("hard_word_count");
  s.letters_per_100_words = j.at("letters_per_100_words");
  s.sentences_per_100_words = j.at("sentences_per_100_words");
  s.degenerate = j.at("degenerate");
  return s;
}

json readability_json(const PlatformResult& r) {
  json scores = json::object();
  json bands = json::object();
  for (size_t i = 0; i < kAllMetrics.size(); ++i) {
    std::string key(metric_key(kAllMetrics[i]));
    scores[key] = r.readability.value(kAllMetrics[i]);
    bands[key] = std::string(band_name(r.bands[i].band));
  }
  return {{"scores", scores}, {"bands", bands}};
}

void readability_from(const json& j, PlatformResult& r) {
  const json& scores = j.at("scores");
  ReadabilityProfile& p = r.readability;
  p.flesch_reading_ease = scores.at("flesch_reading_ease");
  p.gunning_fog = scores.at("gunning_fog");
  p.flesch_kincaid_grade = scores.at("flesch_kincaid_grade");
  p.coleman_liau = scores.at("coleman_liau");
  p.smog = scores.at("smog");
  p.lensear = scores.at("lensear");
  p.ari = scores.at("ari");
  for (size_t i = 0; i < kAllMetrics.size(); ++i) {
    std::string key(metric_key(kAllMetrics[i]));
    r.bands[i] = ReadabilityBand{kAllMetrics[i],
                                 band_from_name(j.at("bands").at(key).get<std::string>())};
  }
}

json clarity_json(const ClarityReport& c) {
  json matches = json::array();
  for (const VagueMatch& m : c.matches) {
    matches.push_back({{"sentence_index", m.sentence_index},
                       {"span", span_json(m.span)},
                       {"canonical", m.canonical},
                       {"surface", m.surface},
                       {"is_variant", m.is_variant}});
  }
  return {{"word_count", c.word_count},
          {"vague_term_count", c.vague_count},
          {"vague_term_density_pct", c.density_pct},
          {"unique_vague_terms", c.unique_terms},
          {"per_term_counts", c.per_term_counts},
          {"per_surface_counts", c.per_surface_counts},
          {"per_category_counts", c.per_category_counts},
          {"matches", matches}};
}

ClarityReport clarity_from(const json& j, const std::string& platform) {
  ClarityReport c;
  c.platform = platform;
  c.word_count = j.at("word_count");
  c.vague_count = j.at("vague_term_count");
  c.density_pct = j.at("vague_term_density_pct");
  c.unique_terms = j.at("unique_vague_terms");
  c.per_term_counts = j.at("per_term_counts").get<std::map<std::string, std::size_t>>();
  c.per_surface_counts = j.at("per_surface_counts").get<std::map<std::string, std::size_t>>();
  c.per_category_counts =
      j.at("per_category_counts").get<std::map<std::string, std::size_t>>();
  for (const json& m : j.at("matches")) {
    c.matches.push_back(VagueMatch{m.at("sentence_index"), span_from(m.at("span")),
                                   m.at("canonical"), m.at("surface"), m.at("is_variant")});
  }
  return c;
}

json finding_json(const SentenceFinding& f) {
  json j = {{"sentence_index", f.sentence_index},
            {"detector", std::string(detector_name(f.detector))},
            {"auto_label", f.auto_label},
            {"evidence_span", span_json(f.evidence_span)},
            {"sentence_text", f.sentence_text}};
  j["human_label"] = f.human_label ? json(*f.human_label) : json(nullptr);
  j["reviewer_note"] = f.reviewer_note;
  return j;
}

SentenceFinding finding_from(const json& j, const std::string& platform) {
  SentenceFinding f;
  f.platform = platform;
  f.sentence_index = j.at("sentence_index");
  f.detector = detector_from_name(j.at("detector").get<std::string>());
  f.auto_label = j.at("auto_label");
  f.evidence_span = span_from(j.at("evidence_span"));
  f.sentence_text = j.at("sentence_text");
  if (!j.at("human_label").is_null()) f.human_label = j.at("human_label").get<std::string>();
  f.reviewer_note = j.value("reviewer_note", std::string());
  return f;
}

json counts_json(const SpecificityCounts& c) {
  return {{"DT", c.dt}, {"EN", c.en}, {"RE_explicit", c.re_explicit},
          {"RE_vague", c.re_vague}, {"SG", c.sg}, {"SS", c.ss}};
}

json scores_json(const SpecificityScores& s) {
  return {{"dt_s", s.dt_s}, {"en_s", s.en_s}, {"r_s", s.r_s}, {"s_s", s.s_s},
          {"composite", s.composite}, {"stage", std::string(stage_name(s.stage))}};
}

json specificity_json(const PlatformSpecificity& s) {
  json findings = json::array();
  for (const SentenceFinding& f : s.findings) findings.push_back(finding_json(f));
  return {{"sentence_count", s.sentence_count},
          {"sharing_verb_sentences", s.sharing_verb_sentences},
          {"auto", {{"counts", counts_json(s.auto_counts)}, {"scores", scores_json(s.auto_scores)}}},
          {"post_review",
           {{"counts", counts_json(s.post_counts)}, {"scores", scores_json(s.post_scores)}}},
          {"coverage",
           {{"data_type_sentence_pct", s.coverage.data_type_sentence_pct},
            {"entity_sentence_pct", s.coverage.entity_sentence_pct},
            {"purpose_sentence_pct", s.coverage.purpose_sentence_pct}}},
          {"findings", findings}};
}

PlatformSpecificity specificity_from(const json& j, const std::string& platform) {
  PlatformSpecificity s;
  s.sentence_count = j.at("sentence_count");
  s.sharing_verb_sentences = j.at("sharing_verb_sentences");
  for (const json& f : j.at("findings")) s.findings.push_back(finding_from(f, platform));
  s.rescore();
  return s;
}

}  // namespace

void PlatformSpecificity::rescore() {
  auto_counts = aggregate_counts(findings, ScoreStage::kAuto);
  post_counts = aggregate_counts(findings, ScoreStage::kPostReview);
  auto_scores = map_scores(auto_counts, ScoreStage::kAuto);
  post_scores = map_scores(post_counts, ScoreStage::kPostReview);
  DocumentSpecificity doc;
  doc.findings = findings;
  doc.sentence_count = sentence_count;
  doc.sharing_verb_sentences = sharing_verb_sentences;
  coverage = compute_coverage(doc, ScoreStage::kPostReview);
}

json to_json(const PlatformResult& r) {
  json fluency = json::array();
  for (const GroupFluency& g : r.fluency) {
    fluency.push_back({{"group", g.group.name},
                       {"wpm_low", g.group.wpm_low},
                       {"wpm_high", g.group.wpm_high},
                       {"minutes_low", g.estimate.minutes_low},
                       {"minutes_high", g.estimate.minutes_high}});
  }
  json j = {{"platform", r.platform},
            {"snapshot_digest", r.snapshot_digest},
            {"source_url", r.source_url},
            {"retrieved_at", r.retrieved_at},
            {"doc_stats", stats_json(r.doc_stats)},
            {"readability", readability_json(r)},
            {"fluency", fluency},
            {"clarity", clarity_json(r.clarity)},
            {"specificity", specificity_json(r.specificity)}};
  j["interface"] = r.interface_assessment ? to_json(*r.interface_assessment) : json(nullptr);
  return j;
}

PlatformResult platform_result_from_json(const json& j) {
  PlatformResult r;
  try {
    r.platform = j.at("platform");
    r.snapshot_digest = j.at("snapshot_digest");
    r.source_url = j.value("source_url", std::string());
    r.retrieved_at = j.value("retrieved_at", std::string());
    r.doc_stats = stats_from(j.at("doc_stats"));
    readability_from(j.at("readability"), r);
    for (const json& g : j.at("fluency")) {
      r.fluency.push_back(GroupFluency{
          ReaderGroup{g.at("group"), g.at("wpm_low"), g.at("wpm_high")},
          FluencyEstimate{g.at("minutes_low"), g.at("minutes_high")}});
    }
    r.clarity = clarity_from(j.at("clarity"), r.platform);
    r.specificity = specificity_from(j.at("specificity"), r.platform);
    if (j.contains("interface") && !j.at("interface").is_null()) {
      r.interface_assessment = assessment_from_json(j.at("interface"));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed platform result: ") + e.what());
  }
  return r;
}

json to_json(const ResultSet& set) {
  json results = json::array();
  for (const PlatformResult& r : set.results) results.push_back(to_json(r));
  json failures = json::array();
  for (const FailureRecord& f : set.failures) {
    failures.push_back({{"platform", f.platform},
                        {"snapshot_digest", f.snapshot_digest},
                        {"message", f.message}});
  }
  return {{"schema_version", kResultsSchemaVersion},
          {"lexicon_versions", set.lexicon_versions},
          {"options", set.options},
          {"results", results},
          {"failures", failures}};
}

ResultSet result_set_from_json(const json& j) {
  ResultSet set;
  try {
    if (j.at("schema_version").get<int>() != kResultsSchemaVersion) {
      throw Error(ErrorCode::kParse, "unsupported results schema_version");
    }
    set.lexicon_versions = j.at("lexicon_versions").get<std::map<std::string, std::string>>();
    set.options = j.value("options", json::object());
    for (const json& r : j.at("results")) set.results.push_back(platform_result_from_json(r));
    for (const json& f : j.value("failures", json::array())) {
      set.failures.push_back(FailureRecord{f.at("platform"), f.value("snapshot_digest", ""),
                                           f.at("message")});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed results: ") + e.what());
  }
  return set;
}

std::string serialize_results(const ResultSet& set) { return to_json(set).dump(2) + "\n"; }

void save_results(const std::filesystem::path& path, const ResultSet& set) {
  write_file_atomic(path, serialize_results(set));
}

ResultSet load_results(const std::filesystem::path& path) {
  try {
    return result_set_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed results " + path.string() + ": " + e.what());
  }
}

std::vector<SentenceFinding> all_findings(const ResultSet& set) {
  std::vector<SentenceFinding> out;
  for (const PlatformResult& r : set.results) {
    out.insert(out.end(), r.specificity.findings.begin(), r.specificity.findings.end());
  }
  return out;
}

void replace_findings(ResultSet& set, const std::vector<SentenceFinding>& findings) {
  for (PlatformResult& r : set.results) {
    r.specificity.findings.clear();
    for (const SentenceFinding& f : findings) {
      if (f.platform == r.platform) r.specificity.findings.push_back(f);
    }
    r.specificity.rescore();
  }
}

}  // namespace tosaudit
