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

// tosaudit: command-line front end.
//
// Exit codes: 0 success, 1 per-document failures or an invalid assessment,
// 2 fatal configuration, lexicon or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "tosaudit/corpus.h"
#include "tosaudit/error.h"
#include "tosaudit/interface_assess.h"
#include "tosaudit/pipeline.h"
#include "tosaudit/report.h"
#include "tosaudit/results_json.h"
#include "tosaudit/review.h"

namespace fs = std::filesystem;
using namespace tosaudit;

namespace {

constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kFatal = 2;

struct FetchArgs {
  std::string config;
  std::string platform;
  std::string corpus;
};

struct AnalyzeArgs {
  std::string corpus;
  std::string lexicons;
  std::string out;
  std::string assessments;
  std::size_t workers = 1;
  bool classic_linsear = false;
  bool canonical_only = false;
};

struct ReviewArgs {
  std::string results;
  std::string review;
  std::string out;
  bool all_detectors = false;
};

struct AssessArgs {
  std::string file;
  std::string corpus;
  std::string lexicons;
  std::string dir;
  std::string platform;
  bool overwrite = false;
  std::size_t limit = 5;
};

struct ReportArgs {
  std::string results = "results.json";
  std::string kind;
  std::string format = "csv";
  std::string out;
  std::string svg;
  std::string assessments;
};

void write_output(const std::string& path, const std::string& contents) {
  if (path == "-") {
    std::cout << contents;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  write_file_atomic(p, contents);
}

int run_fetch(const FetchArgs& a) {
  CorpusConfig config = load_corpus_config(a.config);
  fs::path root = a.corpus.empty() ? fs::path(config.corpus_dir) : fs::path(a.corpus);
  if (a.corpus.empty() && root.is_relative()) root = config.base_dir / root;
  std::optional<std::string> only;
  if (!a.platform.empty()) only = a.platform;
  std::vector<FetchOutcome> outcomes = fetch_all(config, only);
  CorpusStore store(root);
  int failures = 0;
  for (FetchOutcome& o : outcomes) {
    if (auto* f = std::get_if<FetchFailure>(&o)) {
      std::cerr << "failed " << f->platform << ": " << f->message << "\n";
      ++failures;
      continue;
    }
    FetchedSnapshot& s = std::get<FetchedSnapshot>(o);
    try {
      StoreResult r = store.store(s.entry, s.payload);
      std::cout << (r.already_stored ? "already stored " : "stored ") << s.entry.platform << " "
                << r.entry.content_digest << "\n";
    } catch (const Error& e) {
      std::cerr << "failed " << s.entry.platform << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures ? kPartial : kOk;
}

int run_analyze(const AnalyzeArgs& a) {
  if (!fs::is_directory(a.corpus)) {
    throw Error(ErrorCode::kNotFound, "corpus directory not found: " + a.corpus);
  }
  LexiconBundle lexicons = load_lexicon_bundle(a.lexicons);
  PipelineOptions options;
  options.workers = a.workers;
  options.readability.classic_linsear_adjustment = a.classic_linsear;
  options.clarity.match_variants = !a.canonical_only;
  if (!a.assessments.empty()) options.assessments_dir = a.assessments;
  ResultSet set = run_pipeline(a.corpus, lexicons, options);
  write_output(a.out, serialize_results(set));
  for (const FailureRecord& f : set.failures) {
    std::cerr << "failed " << f.platform << ": " << f.message << "\n";
  }
  std::cerr << set.results.size() << " analysed, " << set.failures.size() << " failed\n";
  return set.failures.empty() ? kOk : kPartial;
}

int run_review_export(const ReviewArgs& a) {
  ResultSet set = load_results(a.results);
  ExportOptions options;
  options.include_data_types_and_entities = a.all_detectors;
  std::vector<ReviewRecord> records = review_records(all_findings(set), options);
  write_output(a.out, format_review(records));
  std::cerr << records.size() << " findings exported\n";
  return kOk;
}

int run_review_apply(const ReviewArgs& a) {
  ResultSet set = load_results(a.results);
  std::vector<SentenceFinding> revised = apply_review_records(
      all_findings(set), parse_review(read_file(a.review)));
  replace_findings(set, revised);
  write_output(a.out, serialize_results(set));
  for (const PlatformResult& r : set.results) {
    const PlatformSpecificity& s = r.specificity;
    std::cerr << r.platform << ": composite " << format_composite(s.auto_scores.composite)
              << " -> " << format_composite(s.post_scores.composite) << "\n";
  }
  return kOk;
}

std::optional<Document> document_for(const std::string& corpus, const std::string& lexicons,
                                      const std::string& platform) {
  if (corpus.empty()) return std::nullopt;
  ExtractionConfig extraction;
  SyllableCounter syllables;
  if (!lexicons.empty()) {
    LexiconBundle b = load_lexicon_bundle(lexicons);
    extraction = b.extraction;
    syllables = b.syllables;
  }
  for (const SnapshotEntry& e : latest_snapshots(load_manifest(corpus))) {
    if (e.platform != platform) continue;
    std::string text =
        extract_text(read_payload(corpus, e), e.media_kind, extraction, e.platform);
    return build_document(platform, std::move(text), syllables);
  }
  throw Error(ErrorCode::kNotFound, "no snapshot for " + platform + " in " + corpus);
}

int run_assess_validate(const AssessArgs& a) {
  InterfaceAssessment assessment = load_assessment(a.file);
  std::optional<Document> doc = document_for(a.corpus, a.lexicons, assessment.platform);
  std::vector<std::string> issues = validate_assessment(assessment, doc ? &*doc : nullptr);
  if (issues.empty()) {
    std::cout << "ok " << assessment.platform << "\n";
    return kOk;
  }
  for (const std::string& i : issues) std::cout << "error " << i << "\n";
  return kPartial;
}

int run_assess_store(const AssessArgs& a) {
  InterfaceAssessment assessment = load_assessment(a.file);
  std::optional<Document> doc = document_for(a.corpus, a.lexicons, assessment.platform);
  require_valid(assessment, doc ? &*doc : nullptr);
  std::cout << store_assessment(a.dir, assessment, a.overwrite).string() << "\n";
  return kOk;
}

int run_assess_suggest(const AssessArgs& a) {
  LexiconBundle b = load_lexicon_bundle(a.lexicons);
  std::optional<Document> doc = document_for(a.corpus, a.lexicons, a.platform);
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [metric, candidates] : suggest_evidence(*doc, b.interface_cues)) {
    nlohmann::json list = nlohmann::json::array();
    for (size_t i = 0; i < candidates.size() && i < a.limit; ++i) {
      list.push_back({{"sentence_index", candidates[i].sentence_index},
                      {"cue_count", candidates[i].cue_count},
                      {"cues", candidates[i].cues},
                      {"sentence_text", candidates[i].sentence_text}});
    }
    out[metric] = list;
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_report_table(const ReportArgs& a) {
  TableKind kind = table_kind_from_name(a.kind);
  TableFormat format = table_format_from_name(a.format);
  if (kind == TableKind::kInterface && !a.assessments.empty()) {
    write_output(a.out,
                 render_interface_table(aggregate_interface(load_assessments(a.assessments)),
                                        format));
    return kOk;
  }
  write_output(a.out, render_table(load_results(a.results).results, kind, format));
  return kOk;
}

int run_report_figure(const ReportArgs& a) {
  FigureKind kind = figure_kind_from_name(a.kind);
  std::vector<PlatformResult> results = load_results(a.results).results;
  FigureFormat format =
      fs::path(a.out).extension() == ".json" ? FigureFormat::kJson : FigureFormat::kCsv;
  write_output(a.out, emit_figure_data(results, kind, format));
  if (!a.svg.empty()) write_output(a.svg, render_figure_svg(results, kind));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Audit Terms-of-Service documents for readability, clarity, "
               "specificity and interface-design evidence."};
  app.require_subcommand(1);
  int code = kOk;
  std::function<int()> action;

  FetchArgs fetch;
  CLI::App* fetch_cmd = app.add_subcommand("fetch", "Snapshot the configured ToS documents");
  fetch_cmd->add_option("--config", fetch.config, "Corpus config (JSON)")->required();
  fetch_cmd->add_option("--platform", fetch.platform, "Only this platform");
  fetch_cmd->add_option("--corpus", fetch.corpus, "Corpus directory (overrides the config)");
  fetch_cmd->callback([&] { action = [&] { return run_fetch(fetch); }; });

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyse the latest snapshots");
  analyze_cmd->add_option("--corpus", analyze.corpus, "Corpus directory")->required();
  analyze_cmd->add_option("--lexicons", analyze.lexicons, "Lexicon directory")->required();
  analyze_cmd->add_option("--out", analyze.out, "Results file")->required();
  analyze_cmd->add_option("--workers", analyze.workers, "Parallel documents (0: all cores)");
  analyze_cmd->add_option("--assessments", analyze.assessments,
                          "Directory of interface assessments to attach");
  analyze_cmd->add_flag("--classic-linsear", analyze.classic_linsear,
                        "Apply the classical Linsear Write ending to Lensear");
  analyze_cmd->add_flag("--canonical-only", analyze.canonical_only,
                        "Count only canonical vague-term spellings");
  analyze_cmd->callback([&] { action = [&] { return run_analyze(analyze); }; });

  ReviewArgs review;
  CLI::App* review_cmd = app.add_subcommand("review", "Manual review of specificity findings");
  review_cmd->require_subcommand(1);
  CLI::App* export_cmd = review_cmd->add_subcommand("export", "Write a review file");
  export_cmd->add_option("--results", review.results, "Results file")->required();
  export_cmd->add_option("--out", review.out, "Review file (JSON Lines)")->required();
  export_cmd->add_flag("--all-detectors", review.all_detectors,
                       "Also export data-type and entity findings");
  export_cmd->callback([&] { action = [&] { return run_review_export(review); }; });
  CLI::App* apply_cmd = review_cmd->add_subcommand("apply", "Apply a reviewed file");
  apply_cmd->add_option("--results", review.results, "Results file")->required();
  apply_cmd->add_option("--review", review.review, "Reviewed file")->required();
  apply_cmd->add_option("--out", review.out, "Revised results file")->required();
  apply_cmd->callback([&] { action = [&] { return run_review_apply(review); }; });

  AssessArgs assess;
  CLI::App* assess_cmd = app.add_subcommand("assess", "Interface-design assessments");
  assess_cmd->require_subcommand(1);
  CLI::App* validate_cmd = assess_cmd->add_subcommand("validate", "Check an assessment");
  validate_cmd->add_option("--file", assess.file, "Assessment file")->required();
  validate_cmd->add_option("--corpus", assess.corpus, "Check excerpts against this corpus");
  validate_cmd->add_option("--lexicons", assess.lexicons, "Lexicon directory");
  validate_cmd->callback([&] { action = [&] { return run_assess_validate(assess); }; });
  CLI::App* store_cmd = assess_cmd->add_subcommand("store", "Validate and store an assessment");
  store_cmd->add_option("--file", assess.file, "Assessment file")->required();
  store_cmd->add_option("--dir", assess.dir, "Assessment directory")->required();
  store_cmd->add_option("--corpus", assess.corpus, "Check excerpts against this corpus");
  store_cmd->add_option("--lexicons", assess.lexicons, "Lexicon directory");
  store_cmd->add_flag("--overwrite", assess.overwrite, "Replace an existing assessment");
  store_cmd->callback([&] { action = [&] { return run_assess_store(assess); }; });
  CLI::App* suggest_cmd =
      assess_cmd->add_subcommand("suggest", "List sentences that mention interface cues");
  suggest_cmd->add_option("--corpus", assess.corpus, "Corpus directory")->required();
  suggest_cmd->add_option("--lexicons", assess.lexicons, "Lexicon directory")->required();
  suggest_cmd->add_option("--platform", assess.platform, "Platform")->required();
  suggest_cmd->add_option("--limit", assess.limit, "Candidates per metric");
  suggest_cmd->callback([&] { action = [&] { return run_assess_suggest(assess); }; });

  ReportArgs report;
  CLI::App* report_cmd = app.add_subcommand("report", "Tables and figure data");
  report_cmd->require_subcommand(1);
  CLI::App* table_cmd = report_cmd->add_subcommand("table", "Cross-platform table");
  table_cmd->add_option("--kind", report.kind, "readability|clarity|specificity|interface")
      ->required();
  table_cmd->add_option("--format", report.format, "csv|md|json");
  table_cmd->add_option("--out", report.out, "Output file ('-' for stdout)")->required();
  table_cmd->add_option("--results", report.results, "Results file");
  table_cmd->add_option("--assessments", report.assessments,
                        "Build the interface table from this directory");
  table_cmd->callback([&] { action = [&] { return run_report_table(report); }; });
  CLI::App* figure_cmd = report_cmd->add_subcommand("figure", "Figure data (+ SVG)");
  figure_cmd->add_option("--kind", report.kind, "words_vs_sentences|reading_time|clarity_bubble")
      ->required();
  figure_cmd->add_option("--out", report.out, "Data file, CSV or .json")->required();
  figure_cmd->add_option("--svg", report.svg, "Also write an SVG chart");
  figure_cmd->add_option("--results", report.results, "Results file");
  figure_cmd->callback([&] { action = [&] { return run_report_figure(report); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kFatal;
  }
  try {
    code = action ? action() : kFatal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFatal;
  }
  return code;
}
