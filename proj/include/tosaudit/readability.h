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

// Seven readability formulas over DocStats, their easy/moderate/hard bands
// and reading-time estimates for reader groups.

#ifndef TOSAUDIT_READABILITY_H_
#define TOSAUDIT_READABILITY_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tosaudit/textprep.h"

namespace tosaudit {

enum class Metric {
  kFleschReadingEase,
  kGunningFog,
  kFleschKincaidGrade,
  kColemanLiau,
  kSmog,
  kLensear,
  kAri,
};

// Report column order.
inline constexpr std::array<Metric, 7> kAllMetrics = {
    Metric::kFleschReadingEase, Metric::kGunningFog,
    Metric::kFleschKincaidGrade, Metric::kColemanLiau,
    Metric::kSmog,              Metric::kLensear,
    Metric::kAri};

std::string_view metric_key(Metric m);    // "flesch_reading_ease"
std::string_view metric_label(Metric m);  // "Flesch-RE"
Metric metric_from_key(std::string_view key);

struct ReadabilityProfile {
  double flesch_reading_ease = 0;
  double gunning_fog = 0;
  double flesch_kincaid_grade = 0;
  double coleman_liau = 0;
  double smog = 0;
  double lensear = 0;
  double ari = 0;

  double value(Metric m) const;
  friend bool operator==(const ReadabilityProfile&, const ReadabilityProfile&) = default;
};

enum class Band { kEasy, kModerate, kHard };

std::string_view band_name(Band b);
Band band_from_name(std::string_view name);

struct ReadabilityBand {
  Metric metric;
  Band band;
};

struct ReadabilityOptions {
  // Applies the classical Linsear Write ending (r > 20 ? r/2 : (r-2)/2)
  // to the Lensear score. Off by default.
  bool classic_linsear_adjustment = false;
};

// Throws Error(kDegenerateDocument) when there are no words or sentences.
ReadabilityProfile compute_readability_profile(const DocStats& stats,
                                               const ReadabilityOptions& options = {});

// Cutoffs:
//   Flesch-RE        >= 60 easy, >= 30 moderate, else hard
//   Fog              <= 8 easy,  < 12 moderate,  else hard
//   F-K, CLI, SMOG   <= 8 easy,  < 13 moderate,  else hard
//   Lensear, ARI     <= 9 easy,  < 13 moderate,  else hard
ReadabilityBand classify_band(Metric metric, double score);
std::array<ReadabilityBand, 7> classify_profile(const ReadabilityProfile& profile);

struct ReaderGroup {
  std::string name;
  double wpm_low = 0;
  double wpm_high = 0;
};

// child_oral 120-128, adult_oral 183, adult_silent 238 words per minute.
std::vector<ReaderGroup> default_reader_groups();

// JSON list of {name, wpm_low, wpm_high}.
std::vector<ReaderGroup> load_reader_groups(const std::filesystem::path& path);

struct FluencyEstimate {
  double minutes_low = 0;   // at wpm_high
  double minutes_high = 0;  // at wpm_low
};

FluencyEstimate estimate_reading_time(std::size_t word_count,
                                      const ReaderGroup& group);

}  // namespace tosaudit

#endif  // TOSAUDIT_READABILITY_H_
