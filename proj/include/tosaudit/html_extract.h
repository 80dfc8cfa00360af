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

#ifndef TOSAUDIT_HTML_EXTRACT_H_
#define TOSAUDIT_HTML_EXTRACT_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tosaudit/corpus.h"

namespace tosaudit {

// A compound selector: optional tag, optional #id, any number of .class.
// "main", "#terms", "div.legal-body", ".cookie-banner".
struct Selector {
  std::string tag;
  std::string id;
  std::vector<std::string> classes;

  static Selector parse(std::string_view text);
  friend bool operator==(const Selector&, const Selector&) = default;
};

struct ExtractionRules {
  std::vector<Selector> include;  // empty: whole page (or <main> if present)
  std::vector<Selector> exclude;
};

// Per-platform overrides, JSON:
//   { "LinkedIn": { "include": ["main"], "exclude": [".cookie-banner"] } }
class ExtractionConfig {
 public:
  ExtractionConfig() = default;

  static ExtractionConfig from_json(const nlohmann::json& j);
  static ExtractionConfig from_file(const std::filesystem::path& path);

  // nullptr when the platform has no overrides.
  const ExtractionRules* rules_for(std::string_view platform) const;
  bool empty() const { return rules_.empty(); }

 private:
  std::map<std::string, ExtractionRules, std::less<>> rules_;
};

// Collapses blanks inside each line, drops trailing/leading blanks and keeps
// at most one blank line between paragraphs.
std::string normalize_whitespace(std::string_view text);

// Main text of an HTML page: scripts, styles, comments and navigation
// chrome (nav/header/footer/aside and their ARIA roles) are removed, block
// elements become paragraph breaks.
std::string extract_html_text(std::string_view html,
                              const ExtractionRules* rules = nullptr);

// Throws Error(kEmptyDocument) on an empty payload. Invalid UTF-8 is
// replaced with U+FFFD.
std::string extract_text(std::string_view payload, MediaKind kind,
                         const ExtractionRules* rules = nullptr);
std::string extract_text(std::string_view payload, MediaKind kind,
                         const ExtractionConfig& config,
                         std::string_view platform);

}  // namespace tosaudit

#endif  // TOSAUDIT_HTML_EXTRACT_H_
