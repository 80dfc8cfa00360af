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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "published_tables.h"
#include "test_support.h"
#include "tosaudit/clarity.h"
#include "tosaudit/corpus.h"
#include "tosaudit/interface_assess.h"
#include "tosaudit/pipeline.h"
#include "tosaudit/readability.h"
#include "tosaudit/report.h"
#include "tosaudit/review.h"
#include "tosaudit/specificity.h"
#include "tosaudit/textprep.h"

namespace tosaudit {
namespace {

using testing::kPublishedClarity;
using testing::kPublishedReadability;
using testing::kPublishedSpecificity;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

//===----------------------------------------------------------------------===//
// 1. Rubric
//===----------------------------------------------------------------------===//

Outcome rubric() {
  int matched = 0;
  std::string misses;
  for (const auto& row : kPublishedSpecificity) {
    SpecificityScores s = map_scores({row.dt, row.en, row.re, 0, row.sg, row.ss});
    bool ok = s.dt_s == row.sub[0] && s.en_s == row.sub[1] && s.r_s == row.sub[2] &&
              s.s_s == row.sub[3] && s.composite == row.composite;
    if (ok) {
      ++matched;
    } else {
      misses += std::string(" ") + row.platform;
    }
  }
  return {matched == 13, std::to_string(matched) + "/13 rows exact" + misses};
}

//===----------------------------------------------------------------------===//
// 2. Density arithmetic
//===----------------------------------------------------------------------===//

Outcome density() {
  int matched = 0;
  double worst = 0;
  for (const auto& row : kPublishedClarity) {
    double d = vague_density_pct(row.count, row.words);
    worst = std::max(worst, std::fabs(d - row.density));
    if (std::fabs(d - row.density) <= 0.01) ++matched;
  }
  return {matched == 13, std::to_string(matched) + "/13 rows within 0.01 (max error " +
                             fmt("%.4f", worst) + "; LinkedIn " +
                             fmt("%.2f", vague_density_pct(364, 5073)) + ")"};
}

//===----------------------------------------------------------------------===//
// 3. Reading time
//===----------------------------------------------------------------------===//

Outcome reading_time() {
  std::vector<ReaderGroup> groups = default_reader_groups();
  FluencyEstimate longest = estimate_reading_time(7395, groups[1]);
  FluencyEstimate shortest = estimate_reading_time(2055, groups[0]);
  bool ok = std::fabs(longest.minutes_low - 40.41) <= 0.1 && longest.minutes_low > 40.0 &&
            std::fabs(shortest.minutes_low - 16.05) <= 0.1 &&
            std::fabs(shortest.minutes_high - 17.13) <= 0.1 && shortest.minutes_low >= 15.0 &&
            shortest.minutes_high <= 20.0;
  return {ok, "7395 words @183 wpm = " + fmt("%.2f", longest.minutes_low) +
                  " min; 2055 words @128-120 wpm = " + fmt("%.2f", shortest.minutes_low) +
                  "-" + fmt("%.2f", shortest.minutes_high) + " min"};
}

//===----------------------------------------------------------------------===//
// 4. Formula oracles
//===----------------------------------------------------------------------===//

struct Oracle {
  const char* text;
  size_t words, sentences, syllables, letters, complex;
  double values[7];
};

// Counts by hand; values evaluated separately in Python from the printed
// formulas.
const Oracle kOracles[] = {
    {"The cat sat on the mat.", 6, 1, 6, 17, 0,
     {116.14500000000001, 2.4000000000000004, -1.4499999999999993, -4.073333333333338, 3.1291,
      6.0, -5.085000000000001}},
    {"We collect information. We share it.", 6, 2, 10, 29, 1,
     {62.79000000000002, 7.866666666666667, 5.246666666666666, 2.7533333333333303,
      7.168621630094336, 4.0, 2.8349999999999973}},
    {"Privacy matters. Read the policy today.", 6, 2, 12, 32, 2,
     {34.59000000000003, 14.533333333333335, 9.180000000000003, 5.693333333333335,
      8.841846274778883, 5.0, 5.189999999999998}},
    {"Our company will notify you. Please review every update carefully.", 10, 2, 21, 55, 4,
     {24.100000000000023, 18.0, 11.14, 10.619999999999994, 11.20814326018867, 9.0,
      6.975000000000001}},
    {"International organizations evaluate information security regularly.", 6, 1, 25, 62, 6,
     {-151.755, 42.400000000000006, 35.91666666666667, 40.02666666666666, 17.122413403193683,
      18.0, 30.240000000000002}},
};

Outcome formula_oracles() {
  int texts_ok = 0;
  double worst = 0;
  for (const Oracle& o : kOracles) {
    DocStats s = build_document("T", o.text).stats;
    bool ok = s.word_count == o.words && s.sentence_count == o.sentences &&
              s.syllable_count == o.syllables && s.letter_count == o.letters &&
              s.complex_word_count == o.complex;
    ReadabilityProfile p = compute_readability_profile(s);
    for (size_t i = 0; i < kAllMetrics.size(); ++i) {
      double err = std::fabs(p.value(kAllMetrics[i]) - o.values[i]);
      worst = std::max(worst, err);
      if (err > 1e-6) ok = false;
    }
    if (ok) ++texts_ok;
  }
  int n = static_cast<int>(std::size(kOracles));
  return {texts_ok == n && n >= 5, std::to_string(texts_ok) + "/" + std::to_string(n) +
                                       " micro-texts, 7 formulas each, max error " +
                                       fmt("%.2e", worst)};
}

//===----------------------------------------------------------------------===//
// 5. Monotonicity and band shading
//===----------------------------------------------------------------------===//

// Words grouped by syllable count under the counting rule.
const std::vector<std::string> kOneSyllable = {"cat", "dog", "sun", "tree", "road", "book",
                                               "hand", "milk", "rain", "star"};
const std::vector<std::string> kTwoSyllable = {"paper", "garden", "window", "river",
                                               "yellow", "pencil", "market", "winter"};
const std::vector<std::string> kThreeSyllable = {"animal", "banana", "computer", "tomato",
                                                 "potato", "elephant", "hospital"};

Outcome monotonicity() {
  std::mt19937 rng(20250301);
  int texts_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // Sentences of one-syllable words; position 0 of sentence 0 is varied.
    size_t sentences = 1 + rng() % 8;
    std::vector<std::vector<std::string>> words(sentences);
    for (auto& sentence : words) {
      size_t n = 4 + rng() % 12;
      for (size_t i = 0; i < n; ++i) sentence.push_back(kOneSyllable[rng() % kOneSyllable.size()]);
    }
    auto render = [&](const std::string& first) {
      std::string text;
      for (size_t s = 0; s < words.size(); ++s) {
        for (size_t i = 0; i < words[s].size(); ++i) {
          std::string w = (s == 0 && i == 0) ? first : words[s][i];
          if (i == 0) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
          text += (text.empty() ? "" : " ") + w;
        }
        text += ".";
      }
      return build_document("T", text).stats;
    };
    DocStats base = render(kOneSyllable[rng() % kOneSyllable.size()]);
    DocStats two = render(kTwoSyllable[rng() % kTwoSyllable.size()]);
    DocStats three = render(kThreeSyllable[rng() % kThreeSyllable.size()]);
    bool ok = two.word_count == base.word_count && two.sentence_count == base.sentence_count &&
              two.syllable_count > base.syllable_count &&
              three.complex_word_count == base.complex_word_count + 1;
    ReadabilityProfile p0 = compute_readability_profile(base);
    ReadabilityProfile p1 = compute_readability_profile(two);
    ReadabilityProfile p2 = compute_readability_profile(three);
    ok = ok && p1.flesch_reading_ease < p0.flesch_reading_ease &&
         p1.flesch_kincaid_grade > p0.flesch_kincaid_grade && p2.gunning_fog > p1.gunning_fog &&
         p2.smog > p1.smog;

    // Reading time: linear in words, decreasing in speed.
    size_t w = base.word_count;
    ReaderGroup slow{"slow", 120, 120}, fast{"fast", 238, 238};
    ok = ok &&
         std::fabs(estimate_reading_time(2 * w, slow).minutes_low -
                   2 * estimate_reading_time(w, slow).minutes_low) < 1e-9 &&
         estimate_reading_time(w, fast).minutes_low < estimate_reading_time(w, slow).minutes_low;

    // Bands never get easier as a grade rises (or harder as Flesch-RE rises).
    for (Metric m : kAllMetrics) {
      double a = static_cast<double>(rng() % 1000) / 10.0 - 20.0;
      double b = a + static_cast<double>(rng() % 300) / 10.0;
      int ba = static_cast<int>(classify_band(m, a).band);
      int bb = static_cast<int>(classify_band(m, b).band);
      ok = ok && (m == Metric::kFleschReadingEase ? bb <= ba : bb >= ba);
    }
    if (ok) ++texts_ok;
  }

  int cells_ok = 0;
  for (const auto& row : kPublishedReadability) {
    for (size_t i = 0; i < kAllMetrics.size(); ++i) {
      Band expected = row.bands[i] == 'e'   ? Band::kEasy
                      : row.bands[i] == 'm' ? Band::kModerate
                                            : Band::kHard;
      if (classify_band(kAllMetrics[i], row.scores[i]).band == expected) ++cells_ok;
    }
  }
  return {texts_ok == 100 && cells_ok == 91,
          "(a) " + std::to_string(texts_ok) + "/100 randomized texts monotone; (b) " +
              std::to_string(cells_ok) + "/91 band cells"};
}

//===----------------------------------------------------------------------===//
// 6. Clarity scanner
//===----------------------------------------------------------------------===//

Outcome clarity(const VagueLexicon& lexicon) {
  std::mt19937 rng(6);
  std::vector<std::string> canon;
  for (const VagueTerm& t : lexicon.terms) canon.push_back(t.canonical);
  auto count = [&](const std::string& text) {
    return scan_vague_terms(build_document("T", text), lexicon).vague_count;
  };

  std::vector<std::string> planted;
  for (int i = 0; i < 40; ++i) planted.push_back(canon[i % canon.size()]);
  std::mt19937 layout(1);
  size_t k_found = count(testing::plant_terms(layout, 400, planted));
  size_t nested = count("We may share certain information with third parties.");

  int increments = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> p;
    size_t k = rng() % 30;
    for (size_t i = 0; i < k; ++i) p.push_back(canon[rng() % canon.size()]);
    std::mt19937 l1(trial);
    size_t before = count(testing::plant_terms(l1, 150, p));
    p.push_back(canon[rng() % canon.size()]);
    std::mt19937 l2(trial);
    size_t after = count(testing::plant_terms(l2, 150, p));
    if (before == k && after == before + 1) ++increments;
  }
  return {k_found == 40 && nested == 3 && increments == 100,
          "K=40 planted -> " + std::to_string(k_found) + "; nesting sentence -> " +
              std::to_string(nested) + " matches; +1 property " + std::to_string(increments) +
              "/100"};
}

//===----------------------------------------------------------------------===//
// 7. Review round trip
//===----------------------------------------------------------------------===//

std::vector<SentenceFinding> synthetic_findings(const std::string& platform, size_t dt,
                                                size_t en, size_t ss) {
  std::vector<SentenceFinding> out;
  size_t sentence = 0;
  auto add = [&](Detector d, const std::string& label) {
    SentenceFinding f;
    f.platform = platform;
    f.sentence_index = sentence;
    f.detector = d;
    f.auto_label = label;
    f.evidence_span = {sentence * 100, sentence * 100 + 20};
    f.sentence_text = "Sentence " + std::to_string(sentence++) + ".";
    out.push_back(f);
  };
  for (size_t i = 0; i < dt; ++i) add(Detector::kDataType, "type " + std::to_string(i));
  for (size_t i = 0; i < en; ++i) add(Detector::kEntity, "Entity " + std::to_string(i));
  for (size_t i = 0; i < ss; ++i) add(Detector::kSharing, "specific");
  return out;
}

Outcome review_round_trip() {
  testing::TempDir dir;
  std::vector<SentenceFinding> findings = synthetic_findings("Bluesky", 10, 4, 5);
  std::vector<SentenceFinding> reddit = synthetic_findings("Reddit", 13, 3, 2);
  findings.insert(findings.end(), reddit.begin(), reddit.end());

  export_review(findings, dir / "review.jsonl");
  std::vector<ReviewRecord> records = parse_review(read_file(dir / "review.jsonl"));
  size_t exported_bluesky = 0;
  int rejected_bluesky = 0;
  for (ReviewRecord& r : records) {
    if (r.platform == "Bluesky") {
      ++exported_bluesky;
      if (rejected_bluesky < 3) {
        r.human_label = "rejected";
        ++rejected_bluesky;
      }
    } else {
      r.human_label = "rejected";
    }
  }
  write_file_atomic(dir / "review.jsonl", format_review(records));
  ReviewOutcome out = apply_review(findings, dir / "review.jsonl");

  const SpecificityScores& b_auto = out.auto_scores["Bluesky"];
  const SpecificityScores& b_post = out.post_scores["Bluesky"];
  const SpecificityScores& r_auto = out.auto_scores["Reddit"];
  const SpecificityScores& r_post = out.post_scores["Reddit"];
  std::string bluesky_ss =
      format_revision(out.auto_counts["Bluesky"].ss, out.post_counts["Bluesky"].ss);
  std::string reddit_ss =
      format_revision(out.auto_counts["Reddit"].ss, out.post_counts["Reddit"].ss);
  bool ok = exported_bluesky == 5 && bluesky_ss == "5→2" && b_post.s_s == 1 &&
            b_post.composite == 1.25 && reddit_ss == "2→0" && r_auto.s_s == 1 &&
            r_post.s_s == 0 && r_post.composite == 1.0;
  return {ok, "Bluesky SS " + bluesky_ss + ", post-review s_s " + std::to_string(b_post.s_s) +
                  " composite " + format_composite(b_post.composite) +
                  " (pre-review composite " + format_composite(b_auto.composite) +
                  "); Reddit SS " + reddit_ss + ", s_s " + std::to_string(r_auto.s_s) + "->" +
                  std::to_string(r_post.s_s)};
}

//===----------------------------------------------------------------------===//
// 8. Interface schema
//===----------------------------------------------------------------------===//

Outcome interface_schema(const LexiconBundle& lexicons) {
  std::filesystem::path corpus = testing::fixture_dir() / "corpus";
  std::map<std::string, Document> docs;
  for (const SnapshotEntry& e : latest_snapshots(load_manifest(corpus))) {
    std::string text = extract_text(read_payload(corpus, e), e.media_kind,
                                    lexicons.extraction, e.platform);
    docs.emplace(e.platform, build_document(e.platform, text, lexicons.syllables));
  }
  std::vector<InterfaceAssessment> all = load_assessments(testing::fixture_dir() / "assessments");
  int accepted = 0;
  for (const InterfaceAssessment& a : all) {
    auto it = docs.find(a.platform);
    if (it != docs.end() && validate_assessment(a, &it->second).empty()) ++accepted;
  }

  InterfaceAssessment out_of_range = all.at(0);
  out_of_range.separate_consent_steps = 3;
  InterfaceAssessment no_evidence = all.at(0);
  no_evidence.evidence.clear();
  bool rejects = !validate_assessment(out_of_range).empty() &&
                 !validate_assessment(no_evidence).empty();

  std::string rendered = render_interface_table(aggregate_interface(all), TableFormat::kCsv);
  bool identical = rendered == read_file(testing::fixture_dir() / "interface_table.csv");
  return {accepted == 13 && rejects && identical,
          std::to_string(accepted) + "/13 rows accepted; bad rows " +
              (rejects ? "rejected" : "NOT rejected") + "; aggregate CSV " +
              (identical ? "byte-identical to golden" : "differs from golden")};
}

//===----------------------------------------------------------------------===//
// 9. End-to-end determinism
//===----------------------------------------------------------------------===//

Outcome determinism() {
  testing::TempDir dir;
  std::string common = "analyze --corpus '" + (testing::fixture_dir() / "corpus").string() +
                       "' --lexicons '" + testing::lexicon_dir().string() + "' --out ";
  auto start = std::chrono::steady_clock::now();
  testing::CommandResult a = testing::run_cli(common + "'" + (dir / "a.json").string() + "'");
  auto mid = std::chrono::steady_clock::now();
  testing::CommandResult b =
      testing::run_cli(common + "'" + (dir / "b.json").string() + "' --workers 4");
  double seconds = std::chrono::duration<double>(mid - start).count();
  if (a.exit_code != 0 || b.exit_code != 0) {
    return {false, "analyze failed: " + a.output + b.output};
  }
  std::string ra = read_file(dir / "a.json");
  std::string rb = read_file(dir / "b.json");
  size_t platforms = nlohmann::json::parse(ra).at("results").size();
  bool ok = ra == rb && platforms == 13 && seconds < 10.0;
  return {ok, std::to_string(platforms) + " documents; results " +
                  (ra == rb ? "byte-identical" : "DIFFER") + " (" +
                  std::to_string(ra.size()) + " bytes); one run " + fmt("%.2f", seconds) +
                  " s"};
}

}  // namespace
}  // namespace tosaudit

int main() {
  using namespace tosaudit;
  LexiconBundle lexicons = load_lexicon_bundle(testing::lexicon_dir());

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"rubric reproduction", rubric},
      {"density arithmetic", density},
      {"reading-time checks", reading_time},
      {"readability formula oracles", formula_oracles},
      {"readability properties and band shading", monotonicity},
      {"clarity scanner", [&] { return clarity(lexicons.vague); }},
      {"review round trip", review_round_trip},
      {"interface schema", [&] { return interface_schema(lexicons); }},
      {"end-to-end determinism", determinism},
  };

  int failures = 0;
  int n = 0;
  for (const Criterion& c : criteria) {
    ++n;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s  %s [%.0f ms]\n", n, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), ms);
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
