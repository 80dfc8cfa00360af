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

#include "tosaudit/readability.h"

#include <cmath>

#include "json.hpp"
#include "tosaudit/corpus.h"
#include "tosaudit/error.h"

namespace tosaudit {

namespace {

struct MetricInfo {
  Metric metric;
  std::string_view key;
  std::string_view label;
};

constexpr std::array<MetricInfo, 7> kMetricInfo = {{
    {Metric::kFleschReadingEase, "flesch_reading_ease", "Flesch-RE"},
    {Metric::kGunningFog, "gunning_fog", "Fog"},
    {Metric::kFleschKincaidGrade, "flesch_kincaid_grade", "F-K Grade"},
    {Metric::kColemanLiau, "coleman_liau", "CLI"},
    {Metric::kSmog, "smog", "SMOG"},
    {Metric::kLensear, "lensear", "Lensear"},
    {Metric::kAri, "ari", "ARI"},
}};

const MetricInfo& info(Metric m) {
  for (const MetricInfo& i : kMetricInfo) {
    if (i.metric == m) return i;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown metric");
}

// Grade-type metric: <= easy_max easy, < hard_min moderate, else hard.
Band grade_band(double score, double easy_max, double hard_min) {
  if (score <= easy_max) return Band::kEasy;
  if (score < hard_min) return Band::kModerate;
  return Band::kHard;
}

}  // namespace

std::string_view metric_key(Metric m) { return info(m).key; }
std::string_view metric_label(Metric m) { return info(m).label; }

Metric metric_from_key(std::string_view key) {
  for (const MetricInfo& i : kMetricInfo) {
    if (i.key == key) return i.metric;
  }
  throw Error(ErrorCode::kParse, "unknown metric \"" + std::string(key) + "\"");
}

double ReadabilityProfile::value(Metric m) const {
  switch (m) {
    case Metric::kFleschReadingEase: return flesch_reading_ease;
    case Metric::kGunningFog: return gunning_fog;
    case Metric::kFleschKincaidGrade: return flesch_kincaid_grade;
    case Metric::kColemanLiau: return coleman_liau;
    case Metric::kSmog: return smog;
    case Metric::kLensear: return lensear;
    case Metric::kAri: return ari;
  }
  return 0;
}

std::string_view band_name(Band b) {
  switch (b) {
    case Band::kEasy: return "easy";
    case Band::kModerate: return "moderate";
    case Band::kHard: return "hard";
  }
  return "hard";
}

Band band_from_name(std::string_view name) {
  if (name == "easy") return Band::kEasy;
  if (name == "moderate") return Band::kModerate;
  if (name == "hard") return Band::kHard;
  throw Error(ErrorCode::kParse, "unknown band \"" + std::string(name) + "\"");
}

ReadabilityProfile compute_readability_profile(const DocStats& stats,
                                               const ReadabilityOptions& options) {
  if (stats.word_count == 0 || stats.sentence_count == 0) {
    throw Error(ErrorCode::kDegenerateDocument, "degenerate document");
  }
  const double words = static_cast<double>(stats.word_count);
  const double sentences = static_cast<double>(stats.sentence_count);
  const double syllables = static_cast<double>(stats.syllable_count);
  const double words_per_sentence = words / sentences;
  const double syllables_per_word = syllables / words;
  const double letters_per_100 = 100.0 * static_cast<double>(stats.letter_count) / words;
  const double sentences_per_100 = 100.0 * sentences / words;

  ReadabilityProfile p;
  p.flesch_reading_ease =
      206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
  p.gunning_fog =
      0.4 * (words_per_sentence +
             100.0 * static_cast<double>(stats.complex_word_count) / words);
  p.flesch_kincaid_grade = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  p.coleman_liau = 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8;
  p.smog = 1.0430 * std::sqrt(static_cast<double>(stats.polysyllable_count) *
                              (30.0 / sentences)) +
           3.1291;
  p.lensear = (static_cast<double>(stats.easy_word_count) * 1.0 +
               static_cast<double>(stats.hard_word_count) * 3.0) /
              sentences;
  if (options.classic_linsear_adjustment) {
    p.lensear = p.lensear > 20.0 ? p.lensear / 2.0 : (p.lensear - 2.0) / 2.0;
  }
  p.ari = 4.71 * (static_cast<double>(stats.character_count) / words) +
          0.5 * words_per_sentence - 21.43;
  return p;
}

ReadabilityBand classify_band(Metric metric, double score) {
  Band band = Band::kHard;
  switch (metric) {
    case Metric::kFleschReadingEase:
      band = score >= 60.0 ? Band::kEasy
             : score >= 30.0 ? Band::kModerate
                             : Band::kHard;
      break;
    case Metric::kGunningFog:
      band = grade_band(score, 8.0, 12.0);
      break;
    case Metric::kFleschKincaidGrade:
    case Metric::kColemanLiau:
    case Metric::kSmog:
      band = grade_band(score, 8.0, 13.0);
      break;
    case Metric::kLensear:
    case Metric::kAri:
      band = grade_band(score, 9.0, 13.0);
      break;
  }
  return ReadabilityBand{metric, band};
}

std::array<ReadabilityBand, 7> classify_profile(const ReadabilityProfile& profile) {
  std::array<ReadabilityBand, 7> out{};
  for (size_t i = 0; i < kAllMetrics.size(); ++i) {
    out[i] = classify_band(kAllMetrics[i], profile.value(kAllMetrics[i]));
  }
  return out;
}

std::vector<ReaderGroup> default_reader_groups() {
  return {
      {"child_oral", 120.0, 128.0},
      {"adult_oral", 183.0, 183.0},
      {"adult_silent", 238.0, 238.0},
  };
}

std::vector<ReaderGroup> load_reader_groups(const std::filesystem::path& path) {
  std::vector<ReaderGroup> groups;
  try {
    nlohmann::json j = nlohmann::json::parse(read_file(path));
    for (const auto& g : j) {
      groups.push_back(ReaderGroup{g.at("name").get<std::string>(),
                                   g.at("wpm_low").get<double>(),
                                   g.at("wpm_high").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse,
                "malformed reader groups " + path.string() + ": " + e.what());
  }
  for (const ReaderGroup& g : groups) {
    if (!(g.wpm_low > 0) || g.wpm_low > g.wpm_high) {
      throw Error(ErrorCode::kValidation,
                  "reader group " + g.name + " needs 0 < wpm_low <= wpm_high");
    }
  }
  if (groups.empty()) {
    throw Error(ErrorCode::kValidation, "reader group file is empty");
  }
  return groups;
}

FluencyEstimate estimate_reading_time(std::size_t word_count,
                                      const ReaderGroup& group) {
  if (!(group.wpm_low > 0) || group.wpm_low > group.wpm_high) {
    throw Error(ErrorCode::kInvalidArgument,
                "reader group " + group.name + " needs 0 < wpm_low <= wpm_high");
  }
  const double words = static_cast<double>(word_count);
  return FluencyEstimate{words / group.wpm_high, words / group.wpm_low};
}

}  // namespace tosaudit
