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

// Corpus-wide analysis: extraction, text statistics, readability, reading
// time, clarity and specificity for the latest snapshot of each platform.

#ifndef TOSAUDIT_PIPELINE_H_
#define TOSAUDIT_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tosaudit/clarity.h"
#include "tosaudit/corpus.h"
#include "tosaudit/html_extract.h"
#include "tosaudit/interface_assess.h"
#include "tosaudit/readability.h"
#include "tosaudit/results_json.h"
#include "tosaudit/specificity.h"
#include "tosaudit/textprep.h"

namespace tosaudit {

// Everything read from a lexicon directory. Required files:
//   vague_terms.json data_types.json entities.json retention.json
//   sharing.json interface_cues.json
// Optional: reader_groups.json extraction.json syllable_exceptions.tsv
struct LexiconBundle {
  VagueLexicon vague;
  SpecificityLexicons specificity;
  CueLexicon interface_cues;
  std::vector<ReaderGroup> reader_groups;
  ExtractionConfig extraction;
  SyllableCounter syllables;
  std::map<std::string, std::string> versions;
};

// Throws kNotFound "lexicon not found: PATH" for a missing required file.
LexiconBundle load_lexicon_bundle(const std::filesystem::path& dir);

struct PipelineOptions {
  std::size_t workers = 1;  // 0: one per hardware thread
  ReadabilityOptions readability;
  ClarityOptions clarity;
  // When set, <platform>.json assessments found here are attached.
  std::optional<std::filesystem::path> assessments_dir;
};

// Analyses one extracted document. Throws kDegenerateDocument when the
// text has no words or sentences.
PlatformResult analyze_document(const Document& doc, const LexiconBundle& lexicons,
                                const SpecificityDetector& detector,
                                const PipelineOptions& options = {});

// Runs over the latest snapshot per platform in corpus_dir. Per-document
// failures are collected in ResultSet::failures; nothing else is fatal.
// The output depends only on snapshot bytes, lexicons and options.
ResultSet run_pipeline(const std::filesystem::path& corpus_dir,
                       const LexiconBundle& lexicons, const PipelineOptions& options = {});

}  // namespace tosaudit

#endif  // TOSAUDIT_PIPELINE_H_
