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

#include "tosaudit/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "tosaudit/error.h"
#include "tosaudit/platform_order.h"

namespace tosaudit {

namespace {

using nlohmann::json;

constexpr std::string_view kArrow = "→";

// A table as header + string cells; rendered to CSV or Markdown.
struct Grid {
  std::vector<std::string> csv_header;
  std::vector<std::string> md_header;
  std::vector<std::vector<std::string>> rows;
};

std::string join(const std::vector<std::string>& cells, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::string render_grid(const Grid& g, TableFormat format) {
  std::string out;
  if (format == TableFormat::kCsv) {
    out += join(g.csv_header, ",") + "\n";
    for (const auto& row : g.rows) out += join(row, ",") + "\n";
    return out;
  }
  out += "| " + join(g.md_header, " | ") + " |\n|";
  for (size_t i = 0; i < g.md_header.size(); ++i) out += i == 0 ? " --- |" : " ---: |";
  out += "\n";
  for (const auto& row : g.rows) out += "| " + join(row, " | ") + " |\n";
  return out;
}

std::vector<PlatformResult> sorted(const std::vector<PlatformResult>& results) {
  if (results.empty()) throw Error(ErrorCode::kNothingToRender, "nothing to render");
  std::vector<PlatformResult> out = results;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return platform_less(a.platform, b.platform);
  });
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string readability_table(const std::vector<PlatformResult>& results,
                              TableFormat format) {
  if (format == TableFormat::kJson) {
    json rows = json::array();
    for (const PlatformResult& r : results) {
      json row = {{"platform", r.platform}};
      for (size_t i = 0; i < kAllMetrics.size(); ++i) {
        row[std::string(metric_key(kAllMetrics[i]))] = {
            {"score", r.readability.value(kAllMetrics[i])},
            {"band", std::string(band_name(r.bands[i].band))}};
      }
      rows.push_back(row);
    }
    return dump(rows);
  }
  Grid g;
  g.csv_header.push_back("platform");
  g.md_header.push_back("Platform");
  for (Metric m : kAllMetrics) {
    g.csv_header.emplace_back(metric_key(m));
    g.md_header.emplace_back(metric_label(m));
  }
  for (const PlatformResult& r : results) {
    std::vector<std::string> row{r.platform};
    for (Metric m : kAllMetrics) row.push_back(format_fixed(r.readability.value(m), 1));
    g.rows.push_back(std::move(row));
  }
  return render_grid(g, format);
}

std::string clarity_table(const std::vector<PlatformResult>& results, TableFormat format) {
  if (format == TableFormat::kJson) {
    json rows = json::array();
    for (const PlatformResult& r : results) {
      rows.push_back({{"platform", r.platform},
                      {"word_count", r.clarity.word_count},
                      {"vague_term_count", r.clarity.vague_count},
                      {"vague_term_density_pct", r.clarity.density_pct},
                      {"unique_vague_terms", r.clarity.unique_terms}});
    }
    return dump(rows);
  }
  Grid g;
  g.csv_header = {"platform", "word_count", "vague_term_count", "vague_term_density_pct",
                  "unique_vague_terms"};
  g.md_header = {"Platform", "Word Count", "Vague Term Count", "Vague Term Density (%)",
                 "Unique Vague Terms"};
  for (const PlatformResult& r : results) {
    g.rows.push_back({r.platform, std::to_string(r.clarity.word_count),
                      std::to_string(r.clarity.vague_count),
                      format_fixed(r.clarity.density_pct, 2),
                      std::to_string(r.clarity.unique_terms)});
  }
  return render_grid(g, format);
}

json counts_row(const SpecificityCounts& c) {
  return {{"DT", c.dt}, {"EN", c.en}, {"RE", c.re_explicit}, {"RE_vague", c.re_vague},
          {"SG", c.sg}, {"SS", c.ss}};
}

std::string specificity_table(const std::vector<PlatformResult>& results,
                              TableFormat format) {
  if (format == TableFormat::kJson) {
    json rows = json::array();
    for (const PlatformResult& r : results) {
      const PlatformSpecificity& s = r.specificity;
      rows.push_back({{"platform", r.platform},
                      {"auto", counts_row(s.auto_counts)},
                      {"post_review", counts_row(s.post_counts)},
                      {"dt_s", s.post_scores.dt_s},
                      {"en_s", s.post_scores.en_s},
                      {"r_s", s.post_scores.r_s},
                      {"s_s", s.post_scores.s_s},
                      {"composite_auto", s.auto_scores.composite},
                      {"composite", s.post_scores.composite}});
    }
    return dump(rows);
  }
  Grid g;
  g.csv_header = {"platform", "DT", "EN", "RE", "SG", "SS",
                  "DT_s", "EN_s", "R_s", "S_s", "specificity"};
  g.md_header = {"Platform", "DT", "EN", "RE", "SG", "SS",
                 "DT_s", "EN_s", "R_s", "S_s", "Specificity"};
  for (const PlatformResult& r : results) {
    const PlatformSpecificity& s = r.specificity;
    const SpecificityCounts& a = s.auto_counts;
    const SpecificityCounts& p = s.post_counts;
    g.rows.push_back({r.platform, format_revision(a.dt, p.dt), format_revision(a.en, p.en),
                      format_revision(a.re_explicit, p.re_explicit),
                      format_revision(a.sg, p.sg), format_revision(a.ss, p.ss),
                      std::to_string(s.post_scores.dt_s), std::to_string(s.post_scores.en_s),
                      std::to_string(s.post_scores.r_s), std::to_string(s.post_scores.s_s),
                      format_composite(s.post_scores.composite)});
  }
  return render_grid(g, format);
}

// Distinct reader-group speeds present in the results, ascending.
std::vector<double> reader_speeds(const std::vector<PlatformResult>& results) {
  std::set<double> speeds;
  for (const PlatformResult& r : results) {
    for (const GroupFluency& f : r.fluency) {
      speeds.insert(f.group.wpm_low);
      speeds.insert(f.group.wpm_high);
    }
  }
  return {speeds.begin(), speeds.end()};
}

std::string wpm_label(double wpm) {
  double whole = std::round(wpm);
  return whole == wpm ? std::to_string(static_cast<long>(whole)) : format_fixed(wpm, 1);
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Plot area geometry shared by the three figures.
struct Frame {
  double width = 760, height = 480;
  double left = 70, right = 30, top = 40, bottom = 90;
  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
};

std::string svg_open(const Frame& f, std::string_view title) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    format_fixed(f.width, 0) + "\" height=\"" + format_fixed(f.height, 0) +
                    "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + format_fixed(f.width / 2, 1) +
         "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + escape_xml(title) +
         "</text>\n";
  out += "<line x1=\"" + format_fixed(f.left, 1) + "\" y1=\"" +
         format_fixed(f.top + f.plot_h(), 1) + "\" x2=\"" +
         format_fixed(f.left + f.plot_w(), 1) + "\" y2=\"" +
         format_fixed(f.top + f.plot_h(), 1) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + format_fixed(f.left, 1) + "\" y1=\"" + format_fixed(f.top, 1) +
         "\" x2=\"" + format_fixed(f.left, 1) + "\" y2=\"" +
         format_fixed(f.top + f.plot_h(), 1) + "\" stroke=\"black\"/>\n";
  return out;
}

std::string axis_labels(const Frame& f, std::string_view x, std::string_view y) {
  return "<text x=\"" + format_fixed(f.left + f.plot_w() / 2, 1) + "\" y=\"" +
         format_fixed(f.height - 10, 1) + "\" text-anchor=\"middle\">" + escape_xml(x) +
         "</text>\n<text x=\"16\" y=\"" + format_fixed(f.top + f.plot_h() / 2, 1) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         format_fixed(f.top + f.plot_h() / 2, 1) + ")\">" + escape_xml(y) + "</text>\n";
}

std::string y_ticks(const Frame& f, double y_max) {
  std::string out;
  for (int i = 0; i <= 4; ++i) {
    double v = y_max * i / 4.0;
    double y = f.top + f.plot_h() - f.plot_h() * i / 4.0;
    out += "<text x=\"" + format_fixed(f.left - 6, 1) + "\" y=\"" + format_fixed(y + 4, 1) +
           "\" text-anchor=\"end\">" + format_fixed(v, v < 10 ? 1 : 0) + "</text>\n";
  }
  return out;
}

std::string category_label(const Frame& f, double x, std::string_view name) {
  double y = f.top + f.plot_h() + 14;
  return "<text x=\"" + format_fixed(x, 1) + "\" y=\"" + format_fixed(y, 1) +
         "\" text-anchor=\"end\" transform=\"rotate(-40 " + format_fixed(x, 1) + " " +
         format_fixed(y, 1) + ")\">" + escape_xml(name) + "</text>\n";
}

double padded_max(double v) { return v <= 0 ? 1.0 : v * 1.1; }

}  // namespace

TableKind table_kind_from_name(std::string_view name) {
  if (name == "readability") return TableKind::kReadability;
  if (name == "clarity") return TableKind::kClarity;
  if (name == "specificity") return TableKind::kSpecificity;
  if (name == "interface") return TableKind::kInterface;
  throw Error(ErrorCode::kInvalidArgument, "unknown table kind \"" + std::string(name) + "\"");
}

TableFormat table_format_from_name(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "md" || name == "markdown") return TableFormat::kMarkdown;
  if (name == "json") return TableFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown table format \"" + std::string(name) + "\"");
}

FigureKind figure_kind_from_name(std::string_view name) {
  if (name == "words_vs_sentences") return FigureKind::kWordsVsSentences;
  if (name == "reading_time") return FigureKind::kReadingTime;
  if (name == "clarity_bubble") return FigureKind::kClarityBubble;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown figure kind \"" + std::string(name) + "\"");
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  // Never print a negative zero.
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_composite(double composite) {
  std::string s = format_fixed(composite, 2);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string format_revision(std::size_t before, std::size_t after) {
  if (before == after) return std::to_string(after);
  return std::to_string(before) + std::string(kArrow) + std::to_string(after);
}

std::string render_interface_table(const std::vector<InterfaceRow>& rows,
                                   TableFormat format) {
  if (rows.empty()) throw Error(ErrorCode::kNothingToRender, "nothing to render");
  if (format == TableFormat::kJson) {
    json out = json::array();
    for (const InterfaceRow& r : rows) {
      json row = {{"platform", r.platform}};
      for (size_t i = 0; i < kAllInterfaceMetrics.size(); ++i) {
        row[std::string(interface_metric_key(kAllInterfaceMetrics[i]))] = r.scores[i];
      }
      out.push_back(row);
    }
    return dump(out);
  }
  Grid g;
  g.csv_header.push_back("platform");
  for (InterfaceMetric m : kAllInterfaceMetrics) {
    g.csv_header.emplace_back(interface_metric_key(m));
  }
  g.md_header = {"Platform",        "Unticked-Checkbox",      "Review-Before-Consent",
                 "Separate Consent Steps", "Explicit Denial Option", "Reversibility Cue"};
  for (const InterfaceRow& r : rows) {
    std::vector<std::string> row{r.platform};
    for (int s : r.scores) row.push_back(std::to_string(s));
    g.rows.push_back(std::move(row));
  }
  return render_grid(g, format);
}

std::string render_table(const std::vector<PlatformResult>& results, TableKind kind,
                         TableFormat format) {
  std::vector<PlatformResult> rows = sorted(results);
  switch (kind) {
    case TableKind::kReadability: return readability_table(rows, format);
    case TableKind::kClarity: return clarity_table(rows, format);
    case TableKind::kSpecificity: return specificity_table(rows, format);
    case TableKind::kInterface: {
      std::vector<InterfaceAssessment> assessments;
      for (const PlatformResult& r : rows) {
        if (r.interface_assessment) assessments.push_back(*r.interface_assessment);
      }
      return render_interface_table(aggregate_interface(assessments), format);
    }
  }
  return {};
}

std::string emit_figure_data(const std::vector<PlatformResult>& results, FigureKind kind,
                             FigureFormat format) {
  std::vector<PlatformResult> rows = sorted(results);
  json records = json::array();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> lines;
  switch (kind) {
    case FigureKind::kWordsVsSentences:
      header = {"platform", "words", "sentences"};
      for (const PlatformResult& r : rows) {
        records.push_back({{"platform", r.platform},
                           {"words", r.doc_stats.word_count},
                           {"sentences", r.doc_stats.sentence_count}});
        lines.push_back({r.platform, std::to_string(r.doc_stats.word_count),
                         std::to_string(r.doc_stats.sentence_count)});
      }
      break;
    case FigureKind::kReadingTime: {
      std::vector<double> speeds = reader_speeds(rows);
      header = {"platform", "words"};
      for (double wpm : speeds) header.push_back("minutes_at_" + wpm_label(wpm) + "_wpm");
      for (const PlatformResult& r : rows) {
        double words = static_cast<double>(r.doc_stats.word_count);
        json minutes = json::object();
        std::vector<std::string> line{r.platform, std::to_string(r.doc_stats.word_count)};
        for (double wpm : speeds) {
          minutes[wpm_label(wpm)] = words / wpm;
          line.push_back(format_fixed(words / wpm, 2));
        }
        records.push_back(
            {{"platform", r.platform}, {"words", r.doc_stats.word_count}, {"minutes", minutes}});
        lines.push_back(std::move(line));
      }
      break;
    }
    case FigureKind::kClarityBubble:
      header = {"platform", "density_pct", "unique_terms"};
      for (const PlatformResult& r : rows) {
        records.push_back({{"platform", r.platform},
                           {"density_pct", r.clarity.density_pct},
                           {"unique_terms", r.clarity.unique_terms}});
        lines.push_back({r.platform, format_fixed(r.clarity.density_pct, 2),
                         std::to_string(r.clarity.unique_terms)});
      }
      break;
  }
  if (format == FigureFormat::kJson) return dump(records);
  std::string out = join(header, ",") + "\n";
  for (const auto& line : lines) out += join(line, ",") + "\n";
  return out;
}

std::string render_figure_svg(const std::vector<PlatformResult>& results, FigureKind kind) {
  std::vector<PlatformResult> rows = sorted(results);
  Frame f;
  std::string out;
  const double n = static_cast<double>(rows.size());
  switch (kind) {
    case FigureKind::kWordsVsSentences: {
      double x_max = 0, y_max = 0;
      for (const PlatformResult& r : rows) {
        x_max = std::max(x_max, static_cast<double>(r.doc_stats.word_count));
        y_max = std::max(y_max, static_cast<double>(r.doc_stats.sentence_count));
      }
      x_max = padded_max(x_max);
      y_max = padded_max(y_max);
      out += svg_open(f, "Sentence count vs. word count");
      out += y_ticks(f, y_max);
      for (int i = 0; i <= 4; ++i) {
        double x = f.left + f.plot_w() * i / 4.0;
        out += "<text x=\"" + format_fixed(x, 1) + "\" y=\"" +
               format_fixed(f.top + f.plot_h() + 16, 1) + "\" text-anchor=\"middle\">" +
               format_fixed(x_max * i / 4.0, 0) + "</text>\n";
      }
      for (const PlatformResult& r : rows) {
        double x = f.left + f.plot_w() * static_cast<double>(r.doc_stats.word_count) / x_max;
        double y = f.top + f.plot_h() -
                   f.plot_h() * static_cast<double>(r.doc_stats.sentence_count) / y_max;
        out += "<circle cx=\"" + format_fixed(x, 1) + "\" cy=\"" + format_fixed(y, 1) +
               "\" r=\"4\" fill=\"steelblue\"/>\n";
        out += "<text x=\"" + format_fixed(x + 6, 1) + "\" y=\"" + format_fixed(y - 6, 1) +
               "\">" + escape_xml(r.platform) + "</text>\n";
      }
      out += axis_labels(f, "Words", "Sentences");
      break;
    }
    case FigureKind::kReadingTime: {
      std::vector<double> speeds = reader_speeds(rows);
      double y_max = 0;
      for (const PlatformResult& r : rows) {
        for (double wpm : speeds) {
          y_max = std::max(y_max, static_cast<double>(r.doc_stats.word_count) / wpm);
        }
      }
      y_max = padded_max(y_max);
      out += svg_open(f, "Estimated reading time (minutes)");
      out += y_ticks(f, y_max);
      const char* colors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2"};
      double slot = f.plot_w() / n;
      double bar = slot * 0.8 / static_cast<double>(std::max<size_t>(speeds.size(), 1));
      for (size_t i = 0; i < rows.size(); ++i) {
        double x0 = f.left + slot * static_cast<double>(i) + slot * 0.1;
        for (size_t k = 0; k < speeds.size(); ++k) {
          double minutes = static_cast<double>(rows[i].doc_stats.word_count) / speeds[k];
          double h = f.plot_h() * minutes / y_max;
          out += "<rect x=\"" + format_fixed(x0 + bar * static_cast<double>(k), 1) +
                 "\" y=\"" + format_fixed(f.top + f.plot_h() - h, 1) + "\" width=\"" +
                 format_fixed(bar, 1) + "\" height=\"" + format_fixed(h, 1) + "\" fill=\"" +
                 colors[k % 5] + "\"/>\n";
        }
        out += category_label(f, x0 + slot * 0.4, rows[i].platform);
      }
      for (size_t k = 0; k < speeds.size(); ++k) {
        double y = f.top + 14.0 * static_cast<double>(k);
        out += "<rect x=\"" + format_fixed(f.left + f.plot_w() - 90, 1) + "\" y=\"" +
               format_fixed(y, 1) + "\" width=\"10\" height=\"10\" fill=\"" + colors[k % 5] +
               "\"/>\n<text x=\"" + format_fixed(f.left + f.plot_w() - 75, 1) + "\" y=\"" +
               format_fixed(y + 9, 1) + "\">" + wpm_label(speeds[k]) + " WPM</text>\n";
      }
      out += axis_labels(f, "", "Minutes");
      break;
    }
    case FigureKind::kClarityBubble: {
      double y_max = 0, u_max = 0;
      for (const PlatformResult& r : rows) {
        y_max = std::max(y_max, r.clarity.density_pct);
        u_max = std::max(u_max, static_cast<double>(r.clarity.unique_terms));
      }
      y_max = padded_max(y_max);
      u_max = std::max(u_max, 1.0);
      out += svg_open(f, "Vague-term density and diversity");
      out += y_ticks(f, y_max);
      double slot = f.plot_w() / n;
      for (size_t i = 0; i < rows.size(); ++i) {
        double x = f.left + slot * (static_cast<double>(i) + 0.5);
        double y = f.top + f.plot_h() - f.plot_h() * rows[i].clarity.density_pct / y_max;
        double radius =
            4.0 + 14.0 * std::sqrt(static_cast<double>(rows[i].clarity.unique_terms) / u_max);
        out += "<circle cx=\"" + format_fixed(x, 1) + "\" cy=\"" + format_fixed(y, 1) +
               "\" r=\"" + format_fixed(radius, 1) +
               "\" fill=\"steelblue\" fill-opacity=\"0.5\" stroke=\"steelblue\"/>\n";
        out += "<text x=\"" + format_fixed(x, 1) + "\" y=\"" + format_fixed(y + 4, 1) +
               "\" text-anchor=\"middle\">" +
               std::to_string(rows[i].clarity.unique_terms) + "</text>\n";
        out += category_label(f, x, rows[i].platform);
      }
      out += axis_labels(f, "", "Vague-term density (%)");
      break;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tosaudit
