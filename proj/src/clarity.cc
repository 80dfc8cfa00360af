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

#include "tosaudit/clarity.h"

#include <algorithm>
#include <set>

#include "tosaudit/corpus.h"
#include "tosaudit/error.h"

namespace tosaudit {

namespace {

using nlohmann::json;

VagueTerm term_from_json(const json& j) {
  VagueTerm t;
  t.canonical = j.at("canonical").get<std::string>();
  if (j.contains("variants")) {
    t.variants = j.at("variants").get<std::vector<std::string>>();
  }
  t.category = category_from_name(j.value("category", "other"));
  return t;
}

}  // namespace

std::string_view category_name(VagueCategory c) {
  switch (c) {
    case VagueCategory::kUncertainty: return "uncertainty";
    case VagueCategory::kActorAmbiguity: return "actor_ambiguity";
    case VagueCategory::kScopeAmbiguity: return "scope_ambiguity";
    case VagueCategory::kOther: return "other";
  }
  return "other";
}

VagueCategory category_from_name(std::string_view name) {
  if (name == "uncertainty") return VagueCategory::kUncertainty;
  if (name == "actor_ambiguity") return VagueCategory::kActorAmbiguity;
  if (name == "scope_ambiguity") return VagueCategory::kScopeAmbiguity;
  if (name == "other") return VagueCategory::kOther;
  throw Error(ErrorCode::kParse, "unknown vague-term category \"" +
                                     std::string(name) + "\"");
}

VagueLexicon parse_vague_lexicon(std::string_view contents) {
  VagueLexicon lex;
  try {
    json j = json::parse(contents);
    const json* terms = &j;
    if (j.is_object()) {
      lex.version = j.at("version").get<std::string>();
      terms = &j.at("terms");
    } else {
      lex.version = "sha256:" + sha256_hex(contents).substr(0, 16);
    }
    if (!terms->is_array()) {
      throw Error(ErrorCode::kParse, "vague lexicon must be a list of terms");
    }
    for (const json& t : *terms) lex.terms.push_back(term_from_json(t));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed vague lexicon: ") + e.what());
  }
  if (lex.terms.empty()) {
    throw Error(ErrorCode::kValidation, "vague lexicon has no terms");
  }
  // The matcher enforces uniqueness of surface forms after case folding.
  PhraseMatcher check;
  size_t id = 0;
  for (const VagueTerm& t : lex.terms) {
    if (tokenize_words(t.canonical).empty()) {
      throw Error(ErrorCode::kValidation, "empty vague term");
    }
    check.add(t.canonical, id++);
    for (const std::string& v : t.variants) {
      if (tokenize_words(v).empty()) {
        throw Error(ErrorCode::kValidation,
                    "empty variant for vague term \"" + t.canonical + "\"");
      }
      check.add(v, id++);
    }
  }
  return lex;
}

VagueLexicon load_vague_lexicon(const std::filesystem::path& path) {
  return parse_vague_lexicon(read_file(path));
}

double vague_density_pct(std::size_t vague_count, std::size_t word_count) {
  if (word_count == 0) return 0.0;
  return 100.0 * static_cast<double>(vague_count) / static_cast<double>(word_count);
}

ClarityScanner::ClarityScanner(const VagueLexicon& lexicon, ClarityOptions options)
    : lexicon_(lexicon) {
  for (size_t t = 0; t < lexicon.terms.size(); ++t) {
    const VagueTerm& term = lexicon.terms[t];
    surfaces_.push_back(Surface{term.canonical, t, false});
    matcher_.add(term.canonical, surfaces_.size() - 1);
    if (!options.match_variants) continue;
    for (const std::string& v : term.variants) {
      surfaces_.push_back(Surface{v, t, true});
      matcher_.add(v, surfaces_.size() - 1);
    }
  }
}

ClarityReport ClarityScanner::scan(const Document& doc) const {
  ClarityReport r;
  r.platform = doc.platform;
  r.word_count = doc.stats.word_count;
  for (const Sentence& s : doc.sentences) {
    for (const PhraseMatch& m : matcher_.find_all(s)) {
      const Surface& surface = surfaces_[m.phrase_id];
      const VagueTerm& term = lexicon_.terms[surface.term];
      r.matches.push_back(VagueMatch{s.index, m.span, term.canonical,
                                     surface.text, surface.variant});
      ++r.per_term_counts[term.canonical];
      ++r.per_surface_counts[surface.text];
      ++r.per_category_counts[std::string(category_name(term.category))];
    }
  }
  r.vague_count = r.matches.size();
  r.unique_terms = r.per_term_counts.size();
  r.density_pct = vague_density_pct(r.vague_count, r.word_count);
  return r;
}

ClarityReport scan_vague_terms(const Document& doc, const VagueLexicon& lexicon,
                               ClarityOptions options) {
  return ClarityScanner(lexicon, options).scan(doc);
}

std::vector<std::pair<std::string, std::size_t>> top_terms(const ClarityReport& report,
                                                           std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  std::vector<std::pair<std::string, std::size_t>> out(report.per_term_counts.begin(),
                                                       report.per_term_counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

}  // namespace tosaudit
