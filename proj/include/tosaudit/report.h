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

// Cross-platform tables and figure data, projected from PlatformResults.
// One row per platform, alphabetical. Empty input is an error
// (kNothingToRender, "nothing to render").

#ifndef TOSAUDIT_REPORT_H_
#define TOSAUDIT_REPORT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tosaudit/interface_assess.h"
#include "tosaudit/results_json.h"

namespace tosaudit {

enum class TableKind { kReadability, kClarity, kSpecificity, kInterface };
enum class TableFormat { kCsv, kMarkdown, kJson };
enum class FigureKind { kWordsVsSentences, kReadingTime, kClarityBubble };
enum class FigureFormat { kCsv, kJson };

TableKind table_kind_from_name(std::string_view name);
TableFormat table_format_from_name(std::string_view name);  // csv, md, json
FigureKind figure_kind_from_name(std::string_view name);

// Readability values to 1 decimal, density to 2, composite on its 0.25
// grid without trailing zeros. Specificity counts changed by review show
// as "auto→post"; sub-scores and composite are post-review.
std::string render_table(const std::vector<PlatformResult>& results, TableKind kind,
                         TableFormat format);

// Interface rows straight from assessments.
std::string render_interface_table(const std::vector<InterfaceRow>& rows,
                                   TableFormat format);

// words_vs_sentences: platform, words, sentences
// reading_time:       platform, words, minutes at every reader-group WPM
// clarity_bubble:     platform, density_pct, unique_terms
std::string emit_figure_data(const std::vector<PlatformResult>& results, FigureKind kind,
                             FigureFormat format);

// Scatter (words_vs_sentences), grouped bars (reading_time) or bubbles
// (clarity_bubble) as a standalone SVG document.
std::string render_figure_svg(const std::vector<PlatformResult>& results, FigureKind kind);

std::string format_composite(double composite);              // 1.25, 1.5, 1
std::string format_revision(std::size_t before, std::size_t after);  // "5→2" or "4"
std::string format_fixed(double value, int decimals);

}  // namespace tosaudit

#endif  // TOSAUDIT_REPORT_H_
