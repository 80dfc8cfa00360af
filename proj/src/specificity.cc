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

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "tosaudit/corpus.h"
#include "tosaudit/error.h"
#include "tosaudit/unicode.h"

namespace tosaudit {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 28> kNumberWords = {
    "one",      "two",     "three",    "four",     "five",      "six",      "seven",
    "eight",    "nine",    "ten",      "eleven",   "twelve",    "thirteen", "fourteen",
    "fifteen",  "sixteen", "seventeen", "eighteen", "nineteen", "twenty",   "thirty",
    "forty",    "fifty",   "sixty",    "seventy",  "eighty",    "ninety",   "hundred"};

constexpr std::array<std::string_view, 8> kUnits = {"day",   "days",   "week", "weeks",
                                                    "month", "months", "year", "years"};

// Allowed between a number and its unit: "30 business days".
constexpr std::array<std::string_view, 2> kUnitQualifiers = {"business", "calendar"};

constexpr std::array<std::string_view, 3> kLeadingArticles = {"The", "A", "An"};

constexpr std::size_t kMaxEntityNameTokens = 5;

template <size_t N>
bool in(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

std::vector<std::string> split_hyphens(std::string_view token) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= token.size(); ++i) {
    if (i == token.size() || token[i] == '-') {
      parts.emplace_back(token.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

bool is_number_part(std::string_view part) {
  if (part.empty()) return false;
  if (std::all_of(part.begin(), part.end(), [](char c) { return is_ascii_digit(c); })) {
    return true;
  }
  return in(kNumberWords, part);
}

bool is_number_token(std::string_view folded) {
  std::vector<std::string> parts = split_hyphens(folded);
  return std::all_of(parts.begin(), parts.end(),
                     [](const std::string& p) { return is_number_part(p); });
}

// "30-day", "twelve-month".
bool is_compound_duration(std::string_view folded) {
  std::vector<std::string> parts = split_hyphens(folded);
  if (parts.size() < 2 || !in(kUnits, parts.back())) return false;
  return std::all_of(parts.begin(), parts.end() - 1,
                     [](const std::string& p) { return is_number_part(p); });
}

bool starts_upper(std::string_view token) {
  return !token.empty() && is_upper(decode_utf8(token, 0).cp);
}

LexiconEntry entry_from_json(const json& j, const std::string& group) {
  LexiconEntry e;
  e.group = group;
  if (j.is_string()) {
    e.canonical = j.get<std::string>();
  } else {
    e.canonical = j.at("canonical").get<std::string>();
    if (j.contains("variants")) {
      e.variants = j.at("variants").get<std::vector<std::string>>();
    }
  }
  return e;
}

std::vector<LexiconEntry> entries_from_json(const json& list, const std::string& group = {}) {
  std::vector<LexiconEntry> out;
  for (const json& j : list) out.push_back(entry_from_json(j, group));
  return out;
}

std::vector<std::string> strings_from_json(const json& j, const char* key) {
  return j.at(key).get<std::vector<std::string>>();
}

std::string version_of(const json& j) { return j.value("version", std::string("unversioned")); }

void check_list(std::string_view what, const std::vector<std::string>& items) {
  if (items.empty()) {
    throw Error(ErrorCode::kValidation, "lexicon list " + std::string(what) + " is empty");
  }
  std::set<std::string> seen;
  for (const std::string& item : items) {
    if (tokenize_words(item).empty()) {
      throw Error(ErrorCode::kValidation,
                  "lexicon list " + std::string(what) + " has an entry without words");
    }
    if (!seen.insert(fold_case(item)).second) {
      throw Error(ErrorCode::kDuplicate, "duplicate entry \"" + item + "\" in lexicon list " +
                                             std::string(what));
    }
  }
}

std::vector<std::string> flatten(const std::vector<LexiconEntry>& entries) {
  std::vector<std::string> out;
  for (const LexiconEntry& e : entries) {
    out.push_back(e.canonical);
    out.insert(out.end(), e.variants.begin(), e.variants.end());
  }
  return out;
}

void add_entries(PhraseMatcher& m, const std::vector<LexiconEntry>& entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    m.add(entries[i].canonical, i);
    for (const std::string& v : entries[i].variants) m.add(v, i);
  }
}

void add_phrases(PhraseMatcher& m, const std::vector<std::string>& phrases) {
  for (size_t i = 0; i < phrases.size(); ++i) m.add(phrases[i], i);
}

SentenceFinding make_finding(const Sentence& s, std::string_view platform, Detector d,
                             std::string label, CharSpan span) {
  SentenceFinding f;
  f.platform = std::string(platform);
  f.sentence_index = s.index;
  f.detector = d;
  f.auto_label = std::move(label);
  f.evidence_span = span;
  f.sentence_text = s.text;
  return f;
}

std::string slice(const Sentence& s, CharSpan span) {
  return s.text.substr(span.start - s.span.start, span.end - span.start);
}

size_t token_distance(size_t a_first, size_t a_last, size_t b_first, size_t b_last) {
  if (b_first > a_last) return b_first - a_last;
  if (a_first > b_last) return a_first - b_last;
  return 0;
}

int retention_rank(std::string_view label) {
  if (label == "explicit") return 2;
  if (label == "vague") return 1;
  return 0;
}

int sharing_rank(std::string_view label) {
  if (label == "specific") return 2;
  if (label == "generic") return 1;
  return 0;
}

}  // namespace

void SpecificityLexicons::validate() const {
  check_list("data_types", flatten(data_types));
  check_list("known_entities", known_entities);
  check_list("corporate_suffixes", corporate_suffixes);
  check_list("retention_verbs", flatten(retention_verbs));
  check_list("vague_retention_phrases", vague_retention_phrases);
  check_list("sharing_verbs", flatten(sharing_verbs));
  check_list("specific_purpose_cues", specific_purpose_cues);
  check_list("generic_purpose_cues", generic_purpose_cues);
  check_list("negation_cues", negation_cues);
}

SpecificityLexicons specificity_lexicons_from_json(const json& data_types,
                                                   const json& entities,
                                                   const json& retention,
                                                   const json& sharing) {
  SpecificityLexicons lex;
  try {
    for (const auto& [category, list] : data_types.at("categories").items()) {
      std::vector<LexiconEntry> e = entries_from_json(list, category);
      lex.data_types.insert(lex.data_types.end(), e.begin(), e.end());
    }
    lex.known_entities = strings_from_json(entities, "known_entities");
    lex.corporate_suffixes = strings_from_json(entities, "corporate_suffixes");
    lex.retention_verbs = entries_from_json(retention.at("verbs"));
    lex.vague_retention_phrases = strings_from_json(retention, "vague_phrases");
    lex.sharing_verbs = entries_from_json(sharing.at("verbs"));
    lex.specific_purpose_cues = strings_from_json(sharing, "specific_purpose_cues");
    lex.generic_purpose_cues = strings_from_json(sharing, "generic_purpose_cues");
    lex.negation_cues = strings_from_json(sharing, "negation_cues");
    lex.versions = {{"data_types", version_of(data_types)},
                    {"entities", version_of(entities)},
                    {"retention", version_of(retention)},
                    {"sharing", version_of(sharing)}};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed specificity lexicon: ") + e.what());
  }
  lex.validate();
  return lex;
}

SpecificityLexicons load_specificity_lexicons(const std::filesystem::path& dir) {
  auto load = [&](const char* name) {
    std::filesystem::path p = dir / name;
    if (!std::filesystem::exists(p)) {
      throw Error(ErrorCode::kNotFound, "lexicon not found: " + p.string());
    }
    try {
      return json::parse(read_file(p));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "malformed lexicon " + p.string() + ": " + e.what());
    }
  };
  return specificity_lexicons_from_json(load("data_types.json"), load("entities.json"),
                                        load("retention.json"), load("sharing.json"));
}

std::string_view detector_name(Detector d) {
  switch (d) {
    case Detector::kDataType: return "data_type";
    case Detector::kEntity: return "entity";
    case Detector::kRetention: return "retention";
    case Detector::kSharing: return "sharing";
  }
  return "data_type";
}

Detector detector_from_name(std::string_view name) {
  if (name == "data_type") return Detector::kDataType;
  if (name == "entity") return Detector::kEntity;
  if (name == "retention") return Detector::kRetention;
  if (name == "sharing") return Detector::kSharing;
  throw Error(ErrorCode::kParse, "unknown detector \"" + std::string(name) + "\"");
}

bool is_legal_label(const SentenceFinding& finding, std::string_view label) {
  if (label == kRejected) return true;
  switch (finding.detector) {
    case Detector::kDataType:
    case Detector::kEntity:
      return label == finding.auto_label;
    case Detector::kRetention:
      return label == "explicit" || label == "vague";
    case Detector::kSharing:
      return label == "specific" || label == "generic" || label == "negated";
  }
  return false;
}

std::vector<Duration> find_durations(const Sentence& sentence) {
  const std::vector<Token>& toks = sentence.tokens;
  std::vector<Duration> out;
  for (size_t k = 0; k < toks.size(); ++k) {
    std::string t = fold_case(toks[k].text);
    if (is_compound_duration(t)) {
      out.push_back(Duration{k, k});
      continue;
    }
    if (!is_number_token(t)) continue;
    size_t u = k + 1;
    if (u < toks.size() && in(kUnitQualifiers, fold_case(toks[u].text))) ++u;
    if (u < toks.size() && in(kUnits, fold_case(toks[u].text))) {
      out.push_back(Duration{k, u});
    }
  }
  return out;
}

SpecificityDetector::SpecificityDetector(SpecificityLexicons lexicons)
    : lexicons_(std::move(lexicons)) {
  lexicons_.validate();
  add_entries(data_types_, lexicons_.data_types);
  add_phrases(entities_, lexicons_.known_entities);
  suffixes_.insert(lexicons_.corporate_suffixes.begin(), lexicons_.corporate_suffixes.end());
  add_entries(retention_verbs_, lexicons_.retention_verbs);
  add_phrases(vague_retention_, lexicons_.vague_retention_phrases);
  add_entries(sharing_verbs_, lexicons_.sharing_verbs);
  add_phrases(specific_cues_, lexicons_.specific_purpose_cues);
  add_phrases(generic_cues_, lexicons_.generic_purpose_cues);
  add_phrases(negation_cues_, lexicons_.negation_cues);
}

std::vector<SentenceFinding> SpecificityDetector::detect_data_types(
    const Sentence& s, std::string_view platform) const {
  std::vector<SentenceFinding> out;
  std::set<size_t> seen;
  for (const PhraseMatch& m : data_types_.find_all(s)) {
    if (!seen.insert(m.phrase_id).second) continue;
    out.push_back(make_finding(s, platform, Detector::kDataType,
                               lexicons_.data_types[m.phrase_id].canonical, m.span));
  }
  return out;
}

// Run of 1-5 capitalized tokens followed by a corporate suffix, as in
// "Meta Platforms, Inc." or "Acme Corp". A leading article is dropped and
// a period right after the suffix belongs to the name.
std::vector<SentenceFinding> SpecificityDetector::suffix_entities(
    const Sentence& s, std::string_view platform) const {
  const std::vector<Token>& toks = s.tokens;
  std::vector<SentenceFinding> out;
  for (size_t i = 1; i < toks.size(); ++i) {
    if (!suffixes_.contains(toks[i].text)) continue;
    size_t first = i;
    while (first > 0 && i - first < kMaxEntityNameTokens) {
      const Token& prev = toks[first - 1];
      const Token& next = toks[first];
      if (!starts_upper(prev.text) || suffixes_.contains(prev.text)) break;
      std::string gap = normalize_gap(std::string_view(s.text).substr(
          prev.span.end - s.span.start, next.span.start - prev.span.end));
      bool ok = gap == " " || (first == i && gap == ", ");
      if (!ok) break;
      --first;
    }
    while (first < i && in(kLeadingArticles, toks[first].text)) ++first;
    if (first == i) continue;
    CharSpan span{toks[first].span.start, toks[i].span.end};
    size_t rel = span.end - s.span.start;
    if (rel < s.text.size() && s.text[rel] == '.') ++span.end;
    out.push_back(make_finding(s, platform, Detector::kEntity, slice(s, span), span));
  }
  return out;
}

std::vector<SentenceFinding> SpecificityDetector::detect_entities(
    const Sentence& s, std::string_view platform) const {
  std::vector<SentenceFinding> out = suffix_entities(s, platform);
  for (const PhraseMatch& m : entities_.find_all(s)) {
    bool overlapped = std::any_of(out.begin(), out.end(), [&](const SentenceFinding& f) {
      return f.detector == Detector::kEntity && f.evidence_span.overlaps(m.span);
    });
    if (!overlapped) {
      out.push_back(make_finding(s, platform, Detector::kEntity,
                                 lexicons_.known_entities[m.phrase_id], m.span));
    }
  }
  std::sort(out.begin(), out.end(), [](const SentenceFinding& a, const SentenceFinding& b) {
    return a.evidence_span < b.evidence_span;
  });
  std::vector<SentenceFinding> distinct;
  std::set<std::string> seen;
  for (SentenceFinding& f : out) {
    if (seen.insert(fold_case(f.auto_label)).second) distinct.push_back(std::move(f));
  }
  return distinct;
}

RetentionResult SpecificityDetector::classify_retention(const Sentence& s,
                                                        std::string_view platform) const {
  RetentionResult r;
  std::vector<PhraseMatch> verbs = retention_verbs_.find_all(s);
  std::vector<Duration> durations = find_durations(s);
  for (const PhraseMatch& v : verbs) {
    size_t v_last = v.first_token + v.token_count - 1;
    for (const Duration& d : durations) {
      if (token_distance(v.first_token, v_last, d.first_token, d.last_token) <=
          kRetentionWindowTokens) {
        CharSpan span{std::min(v.span.start, s.tokens[d.first_token].span.start),
                      std::max(v.span.end, s.tokens[d.last_token].span.end)};
        r.label = RetentionLabel::kExplicit;
        r.finding = make_finding(s, platform, Detector::kRetention, "explicit", span);
        return r;
      }
    }
  }
  if (!durations.empty()) return r;
  std::vector<PhraseMatch> vague = vague_retention_.find_all(s);
  if (!vague.empty()) {
    r.label = RetentionLabel::kVague;
    r.finding = make_finding(s, platform, Detector::kRetention, "vague", vague.front().span);
  }
  return r;
}

SharingResult SpecificityDetector::classify_sharing(const Sentence& s,
                                                    std::string_view platform) const {
  SharingResult r;
  if (sharing_verbs_.find_all(s).empty()) return r;
  r.has_sharing_verb = true;
  std::vector<PhraseMatch> specific = specific_cues_.find_all(s);
  std::vector<PhraseMatch> generic = generic_cues_.find_all(s);
  if (!specific.empty()) {
    r.label = SharingLabel::kSpecific;
    r.findings.push_back(
        make_finding(s, platform, Detector::kSharing, "specific", specific.front().span));
  }
  if (!generic.empty()) {
    if (r.label == SharingLabel::kNone) r.label = SharingLabel::kGeneric;
    r.findings.push_back(
        make_finding(s, platform, Detector::kSharing, "generic", generic.front().span));
  }
  if (r.findings.empty()) {
    std::vector<PhraseMatch> negation = negation_cues_.find_all(s);
    if (!negation.empty()) {
      r.label = SharingLabel::kNegated;
      r.findings.push_back(
          make_finding(s, platform, Detector::kSharing, "negated", negation.front().span));
    }
  }
  return r;
}

DocumentSpecificity analyze_specificity(const Document& doc,
                                        const SpecificityDetector& detector) {
  DocumentSpecificity out;
  out.platform = doc.platform;
  out.sentence_count = doc.sentences.size();
  for (const Sentence& s : doc.sentences) {
    auto append = [&](std::vector<SentenceFinding> v) {
      for (SentenceFinding& f : v) out.findings.push_back(std::move(f));
    };
    append(detector.detect_data_types(s, doc.platform));
    append(detector.detect_entities(s, doc.platform));
    RetentionResult re = detector.classify_retention(s, doc.platform);
    if (re.finding) out.findings.push_back(std::move(*re.finding));
    SharingResult sh = detector.classify_sharing(s, doc.platform);
    if (sh.has_sharing_verb) ++out.sharing_verb_sentences;
    append(std::move(sh.findings));
  }
  return out;
}

std::string_view stage_name(ScoreStage s) {
  return s == ScoreStage::kAuto ? "auto" : "post_review";
}

SpecificityCounts aggregate_counts(const std::vector<SentenceFinding>& findings,
                                   ScoreStage stage) {
  for (const SentenceFinding& f : findings) {
    if (f.platform != findings.front().platform) {
      throw Error(ErrorCode::kInvalidArgument,
                  "findings span multiple documents: " + findings.front().platform +
                      " and " + f.platform);
    }
  }
  std::set<std::string> data_types;
  std::set<std::string> entities;
  std::map<size_t, int> retention;  // sentence -> best rank
  std::map<size_t, int> sharing;
  for (const SentenceFinding& f : findings) {
    if (stage == ScoreStage::kPostReview && f.rejected()) continue;
    const std::string& label =
        stage == ScoreStage::kAuto ? f.auto_label : f.effective_label();
    switch (f.detector) {
      case Detector::kDataType:
        data_types.insert(fold_case(label));
        break;
      case Detector::kEntity:
        entities.insert(fold_case(label));
        break;
      case Detector::kRetention: {
        int& best = retention[f.sentence_index];
        best = std::max(best, retention_rank(label));
        break;
      }
      case Detector::kSharing: {
        int& best = sharing[f.sentence_index];
        best = std::max(best, sharing_rank(label));
        break;
      }
    }
  }
  SpecificityCounts c;
  c.dt = data_types.size();
  c.en = entities.size();
  for (const auto& [_, rank] : retention) {
    if (rank == 2) ++c.re_explicit;
    if (rank == 1) ++c.re_vague;
  }
  for (const auto& [_, rank] : sharing) {
    if (rank == 2) ++c.ss;
    if (rank == 1) ++c.sg;
  }
  return c;
}

SpecificityScores map_scores(const SpecificityCounts& c, ScoreStage stage) {
  SpecificityScores s;
  s.stage = stage;
  s.dt_s = c.dt >= 4 ? 2 : c.dt >= 1 ? 1 : 0;
  s.en_s = c.en >= 3 ? 2 : c.en >= 1 ? 1 : 0;
  s.r_s = c.re_explicit >= 1 ? 2 : c.re_vague >= 1 ? 1 : 0;
  s.s_s = c.ss >= 3 ? 2 : (c.ss >= 1 || c.sg >= 1) ? 1 : 0;
  s.composite = (s.dt_s + s.en_s + s.r_s + s.s_s) / 4.0;
  return s;
}

SpecificityCoverage compute_coverage(const DocumentSpecificity& doc, ScoreStage stage) {
  std::set<size_t> dt, en, purpose;
  for (const SentenceFinding& f : doc.findings) {
    if (stage == ScoreStage::kPostReview && f.rejected()) continue;
    const std::string& label =
        stage == ScoreStage::kAuto ? f.auto_label : f.effective_label();
    if (f.detector == Detector::kDataType) dt.insert(f.sentence_index);
    if (f.detector == Detector::kEntity) en.insert(f.sentence_index);
    if (f.detector == Detector::kSharing && sharing_rank(label) > 0) {
      purpose.insert(f.sentence_index);
    }
  }
  auto pct = [](size_t n, size_t d) {
    return d == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(d);
  };
  return SpecificityCoverage{pct(dt.size(), doc.sentence_count),
                             pct(en.size(), doc.sentence_count),
                             pct(purpose.size(), doc.sharing_verb_sentences)};
}

}  // namespace tosaudit
