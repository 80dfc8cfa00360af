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

#include "tosaudit/pipeline.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <variant>

#include "tosaudit/error.h"
#include "tosaudit/platform_order.h"

namespace tosaudit {

namespace {

using nlohmann::json;

std::filesystem::path required(const std::filesystem::path& dir, const char* name) {
  std::filesystem::path p = dir / name;
  if (!std::filesystem::is_regular_file(p)) {
    throw Error(ErrorCode::kNotFound, "lexicon not found: " + p.string());
  }
  return p;
}

json parse_json_file(const std::filesystem::path& p) {
  try {
    return json::parse(read_file(p));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed lexicon " + p.string() + ": " + e.what());
  }
}

std::string content_version(const std::filesystem::path& p) {
  return "sha256:" + sha256_hex(read_file(p)).substr(0, 16);
}

using Outcome = std::variant<PlatformResult, FailureRecord>;

Outcome analyze_entry(const std::filesystem::path& corpus_dir, const SnapshotEntry& entry,
                      const LexiconBundle& lexicons, const SpecificityDetector& detector,
                      const PipelineOptions& options,
                      const std::map<std::string, InterfaceAssessment>& assessments) {
  try {
    std::string payload = read_payload(corpus_dir, entry);
    std::string text =
        extract_text(payload, entry.media_kind, lexicons.extraction, entry.platform);
    Document doc = build_document(entry.platform, std::move(text), lexicons.syllables);
    PlatformResult r = analyze_document(doc, lexicons, detector, options);
    r.snapshot_digest = entry.content_digest;
    r.source_url = entry.source_url;
    r.retrieved_at = entry.retrieved_at;
    auto it = assessments.find(entry.platform);
    if (it != assessments.end()) {
      std::vector<std::string> issues = validate_assessment(it->second, &doc);
      if (!issues.empty()) {
        std::string msg = "invalid assessment:";
        for (const std::string& i : issues) msg += " " + i + ";";
        msg.pop_back();
        return FailureRecord{entry.platform, entry.content_digest, msg};
      }
      r.interface_assessment = it->second;
    }
    return r;
  } catch (const Error& e) {
    return FailureRecord{entry.platform, entry.content_digest, e.what()};
  } catch (const std::exception& e) {
    return FailureRecord{entry.platform, entry.content_digest, e.what()};
  }
}

}  // namespace

LexiconBundle load_lexicon_bundle(const std::filesystem::path& dir) {
  LexiconBundle b;
  std::filesystem::path vague = required(dir, "vague_terms.json");
  std::filesystem::path data_types = required(dir, "data_types.json");
  std::filesystem::path entities = required(dir, "entities.json");
  std::filesystem::path retention = required(dir, "retention.json");
  std::filesystem::path sharing = required(dir, "sharing.json");
  std::filesystem::path cues = required(dir, "interface_cues.json");

  b.vague = load_vague_lexicon(vague);
  b.specificity =
      specificity_lexicons_from_json(parse_json_file(data_types), parse_json_file(entities),
                                     parse_json_file(retention), parse_json_file(sharing));
  b.interface_cues = parse_cue_lexicon(parse_json_file(cues));

  b.versions["vague_terms"] = b.vague.version;
  for (const auto& [family, version] : b.specificity.versions) b.versions[family] = version;
  b.versions["interface_cues"] = b.interface_cues.version;

  std::filesystem::path groups = dir / "reader_groups.json";
  if (std::filesystem::is_regular_file(groups)) {
    b.reader_groups = load_reader_groups(groups);
    b.versions["reader_groups"] = content_version(groups);
  } else {
    b.reader_groups = default_reader_groups();
    b.versions["reader_groups"] = "builtin";
  }
  std::filesystem::path extraction = dir / "extraction.json";
  if (std::filesystem::is_regular_file(extraction)) {
    b.extraction = ExtractionConfig::from_file(extraction);
    b.versions["extraction"] = content_version(extraction);
  }
  std::filesystem::path syllables = dir / "syllable_exceptions.tsv";
  if (std::filesystem::is_regular_file(syllables)) {
    b.syllables = SyllableCounter::from_file(syllables);
    b.versions["syllable_exceptions"] = content_version(syllables);
  }
  return b;
}

PlatformResult analyze_document(const Document& doc, const LexiconBundle& lexicons,
                                const SpecificityDetector& detector,
                                const PipelineOptions& options) {
  if (doc.stats.degenerate) {
    throw Error(ErrorCode::kDegenerateDocument, "degenerate document");
  }
  PlatformResult r;
  r.platform = doc.platform;
  r.doc_stats = doc.stats;
  r.readability = compute_readability_profile(doc.stats, options.readability);
  r.bands = classify_profile(r.readability);
  for (const ReaderGroup& g : lexicons.reader_groups) {
    r.fluency.push_back(GroupFluency{g, estimate_reading_time(doc.stats.word_count, g)});
  }
  r.clarity = scan_vague_terms(doc, lexicons.vague, options.clarity);
  DocumentSpecificity found = analyze_specificity(doc, detector);
  r.specificity.findings = std::move(found.findings);
  r.specificity.sentence_count = found.sentence_count;
  r.specificity.sharing_verb_sentences = found.sharing_verb_sentences;
  r.specificity.rescore();
  return r;
}

ResultSet run_pipeline(const std::filesystem::path& corpus_dir,
                       const LexiconBundle& lexicons, const PipelineOptions& options) {
  std::vector<SnapshotEntry> entries = latest_snapshots(load_manifest(corpus_dir));
  SpecificityDetector detector(lexicons.specificity);

  std::map<std::string, InterfaceAssessment> assessments;
  if (options.assessments_dir) {
    for (InterfaceAssessment& a : load_assessments(*options.assessments_dir)) {
      std::string platform = a.platform;
      if (!assessments.emplace(platform, std::move(a)).second) {
        throw Error(ErrorCode::kDuplicate, "duplicate platform: " + platform);
      }
    }
  }

  std::vector<std::optional<Outcome>> outcomes(entries.size());
  size_t workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::clamp<size_t>(workers, 1, std::max<size_t>(entries.size(), 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < entries.size(); i = next++) {
      outcomes[i] =
          analyze_entry(corpus_dir, entries[i], lexicons, detector, options, assessments);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  ResultSet set;
  set.lexicon_versions = lexicons.versions;
  set.options = {{"classic_linsear_adjustment", options.readability.classic_linsear_adjustment},
                 {"match_vague_variants", options.clarity.match_variants}};
  for (std::optional<Outcome>& o : outcomes) {
    if (auto* r = std::get_if<PlatformResult>(&*o)) {
      set.results.push_back(std::move(*r));
    } else {
      set.failures.push_back(std::get<FailureRecord>(std::move(*o)));
    }
  }
  std::stable_sort(set.results.begin(), set.results.end(), [](const auto& a, const auto& b) {
    return platform_less(a.platform, b.platform);
  });
  std::stable_sort(set.failures.begin(), set.failures.end(), [](const auto& a, const auto& b) {
    return platform_less(a.platform, b.platform);
  });
  return set;
}

}  // namespace tosaudit
