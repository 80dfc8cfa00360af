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

#include "tosaudit/html_extract.h"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include "tosaudit/error.h"
#include "tosaudit/textprep.h"
#include "tosaudit/unicode.h"

namespace tosaudit {

namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kVoidTags = {
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

// Content of these is never rendered.
const std::set<std::string, std::less<>> kRawTextTags = {
    "script", "style", "textarea", "title", "noscript", "template", "xmp"};

const std::set<std::string, std::less<>> kDroppedTags = {
    "head", "svg",  "math",   "iframe", "object", "canvas", "select",
    "button", "nav", "header", "footer", "aside",  "menu",   "dialog"};

const std::set<std::string, std::less<>> kDroppedRoles = {
    "navigation", "banner", "contentinfo", "complementary", "search",
    "dialog",     "alertdialog"};

const std::set<std::string, std::less<>> kBlockTags = {
    "address", "article", "blockquote", "body",    "caption", "dd",
    "details", "div",     "dl",         "dt",      "fieldset", "figcaption",
    "figure",  "form",    "h1",         "h2",      "h3",      "h4",
    "h5",      "h6",      "hr",         "html",    "legend",  "li",
    "main",    "ol",      "p",          "pre",     "section", "summary",
    "table",   "tbody",   "td",         "tfoot",   "th",      "thead",
    "tr",      "ul"};

const std::map<std::string, char32_t, std::less<>> kEntities = {
    {"amp", '&'},      {"lt", '<'},       {"gt", '>'},       {"quot", '"'},
    {"apos", '\''},    {"nbsp", ' '},     {"rsquo", 0x2019}, {"lsquo", 0x2018},
    {"rdquo", 0x201D}, {"ldquo", 0x201C}, {"ndash", 0x2013}, {"mdash", 0x2014},
    {"hellip", 0x2026}, {"copy", 0xA9},   {"reg", 0xAE},     {"trade", 0x2122},
    {"bull", 0x2022},  {"middot", 0xB7},  {"sect", 0xA7},    {"para", 0xB6},
    {"laquo", 0xAB},   {"raquo", 0xBB},   {"eacute", 0xE9},  {"egrave", 0xE8},
    {"aacute", 0xE1},  {"agrave", 0xE0},  {"uuml", 0xFC},    {"ouml", 0xF6},
    {"auml", 0xE4},    {"ccedil", 0xE7},  {"ntilde", 0xF1},  {"shy", 0xAD},
    {"zwj", 0x200D},   {"zwnj", 0x200C},  {"thinsp", ' '},   {"ensp", ' '},
    {"emsp", ' '}};

struct Node {
  std::string tag;  // empty for text nodes
  std::string text;
  std::string id;
  std::vector<std::string> classes;
  std::string role;
  bool hidden = false;
  std::vector<std::unique_ptr<Node>> children;
};

std::string lower(std::string_view s) { return fold_case(s); }

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view name = s.substr(i + 1, semi - i - 1);
    char32_t cp = 0;
    bool ok = false;
    if (!name.empty() && name[0] == '#') {
      std::string digits(name.substr(1));
      int base = 10;
      if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
        base = 16;
        digits.erase(0, 1);
      }
      if (!digits.empty() && digits.size() <= 7) {
        char* end = nullptr;
        unsigned long v = std::strtoul(digits.c_str(), &end, base);
        if (end && *end == '\0' && v > 0 && v <= 0x10FFFF &&
            !(v >= 0xD800 && v <= 0xDFFF)) {
          cp = static_cast<char32_t>(v);
          ok = true;
        }
      }
    } else if (auto it = kEntities.find(name); it != kEntities.end()) {
      cp = it->second;
      ok = true;
    }
    if (!ok) {
      out.push_back(s[i++]);
      continue;
    }
    if (cp == 0xA0) cp = ' ';
    if (cp != 0xAD && cp != 0x200B && cp != 0x200C && cp != 0x200D) {
      append_utf8(out, cp);
    }
    i = semi + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view html) : html_(html) {}

  std::unique_ptr<Node> parse() {
    auto root = std::make_unique<Node>();
    root->tag = "#root";
    stack_.push_back(root.get());
    while (pos_ < html_.size()) {
      if (html_[pos_] == '<') {
        if (html_.compare(pos_, 4, "<!--") == 0) {
          size_t end = html_.find("-->", pos_ + 4);
          pos_ = end == std::string_view::npos ? html_.size() : end + 3;
        } else if (pos_ + 1 < html_.size() &&
                   (html_[pos_ + 1] == '!' || html_[pos_ + 1] == '?')) {
          size_t end = html_.find('>', pos_);
          pos_ = end == std::string_view::npos ? html_.size() : end + 1;
        } else if (pos_ + 1 < html_.size() && html_[pos_ + 1] == '/') {
          parse_end_tag();
        } else if (pos_ + 1 < html_.size() && is_ascii_alpha(html_[pos_ + 1])) {
          parse_start_tag();
        } else {
          add_text(html_.substr(pos_, 1));
          ++pos_;
        }
      } else {
        size_t next = html_.find('<', pos_);
        if (next == std::string_view::npos) next = html_.size();
        add_text(html_.substr(pos_, next - pos_));
        pos_ = next;
      }
    }
    return root;
  }

 private:
  void add_text(std::string_view raw) {
    auto node = std::make_unique<Node>();
    node->text = decode_entities(raw);
    stack_.back()->children.push_back(std::move(node));
  }

  std::string read_name() {
    size_t start = pos_;
    while (pos_ < html_.size() &&
           (std::isalnum(static_cast<unsigned char>(html_[pos_])) ||
            html_[pos_] == '-' || html_[pos_] == '_' || html_[pos_] == ':')) {
      ++pos_;
    }
    return lower(html_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < html_.size() && is_space_byte(html_[pos_])) ++pos_;
  }

  void parse_end_tag() {
    pos_ += 2;
    std::string name = read_name();
    size_t end = html_.find('>', pos_);
    pos_ = end == std::string_view::npos ? html_.size() : end + 1;
    for (size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == name) {
        stack_.resize(i);
        return;
      }
    }
  }

  void parse_start_tag() {
    ++pos_;
    auto node = std::make_unique<Node>();
    node->tag = read_name();
    bool self_closing = false;
    while (pos_ < html_.size()) {
      skip_space();
      if (pos_ >= html_.size()) break;
      if (html_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (html_[pos_] == '/') {
        self_closing = true;
        ++pos_;
        continue;
      }
      size_t name_start = pos_;
      while (pos_ < html_.size() && !is_space_byte(html_[pos_]) &&
             html_[pos_] != '=' && html_[pos_] != '>' && html_[pos_] != '/') {
        ++pos_;
      }
      std::string attr = lower(html_.substr(name_start, pos_ - name_start));
      if (attr.empty()) {
        ++pos_;
        continue;
      }
      std::string value;
      skip_space();
      if (pos_ < html_.size() && html_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ < html_.size() && (html_[pos_] == '"' || html_[pos_] == '\'')) {
          char q = html_[pos_++];
          size_t end = html_.find(q, pos_);
          if (end == std::string_view::npos) end = html_.size();
          value = decode_entities(html_.substr(pos_, end - pos_));
          pos_ = std::min(end + 1, html_.size());
        } else {
          size_t start = pos_;
          while (pos_ < html_.size() && !is_space_byte(html_[pos_]) &&
                 html_[pos_] != '>') {
            ++pos_;
          }
          value = decode_entities(html_.substr(start, pos_ - start));
        }
      }
      if (attr == "id") {
        node->id = value;
      } else if (attr == "class") {
        std::istringstream ss(value);
        std::string cls;
        while (ss >> cls) node->classes.push_back(cls);
      } else if (attr == "role") {
        node->role = lower(value);
      } else if (attr == "hidden" ||
                 (attr == "aria-hidden" && lower(value) == "true")) {
        node->hidden = true;
      }
    }

    Node* raw = node.get();
    stack_.back()->children.push_back(std::move(node));
    if (kRawTextTags.contains(raw->tag)) {
      std::string close = "</" + raw->tag;
      size_t end = pos_;
      while (true) {
        end = html_.find("</", end);
        if (end == std::string_view::npos) break;
        if (lower(html_.substr(end, close.size())) == close) break;
        end += 2;
      }
      if (end == std::string_view::npos) {
        pos_ = html_.size();
      } else {
        size_t gt = html_.find('>', end);
        pos_ = gt == std::string_view::npos ? html_.size() : gt + 1;
      }
      return;
    }
    if (!self_closing && !kVoidTags.contains(raw->tag)) stack_.push_back(raw);
  }

  std::string_view html_;
  size_t pos_ = 0;
  std::vector<Node*> stack_;
};

bool matches(const Selector& sel, const Node& node) {
  if (node.tag.empty()) return false;
  if (!sel.tag.empty() && sel.tag != node.tag) return false;
  if (!sel.id.empty() && sel.id != node.id) return false;
  for (const std::string& cls : sel.classes) {
    if (std::find(node.classes.begin(), node.classes.end(), cls) ==
        node.classes.end()) {
      return false;
    }
  }
  return true;
}

bool matches_any(const std::vector<Selector>& sels, const Node& node) {
  return std::any_of(sels.begin(), sels.end(),
                     [&](const Selector& s) { return matches(s, node); });
}

bool is_dropped(const Node& node) {
  return kDroppedTags.contains(node.tag) || kRawTextTags.contains(node.tag) ||
         kDroppedRoles.contains(node.role) || node.hidden;
}

class Renderer {
 public:
  explicit Renderer(const std::vector<Selector>& exclude) : exclude_(exclude) {}

  void render(const Node& node) {
    if (node.tag.empty()) {
      append_inline(node.text);
      return;
    }
    if (is_dropped(node) || matches_any(exclude_, node)) return;
    if (node.tag == "br") {
      out_.push_back('\n');
      return;
    }
    bool block = kBlockTags.contains(node.tag);
    if (block) out_ += "\n\n";
    if (node.tag == "td" || node.tag == "th") out_.push_back(' ');
    for (const auto& child : node.children) render(*child);
    if (block) out_ += "\n\n";
  }

  void paragraph_break() { out_ += "\n\n"; }
  std::string take() { return std::move(out_); }

 private:
  void append_inline(std::string_view text) {
    for (char c : text) {
      out_.push_back(is_space_byte(c) ? ' ' : c);
    }
  }

  const std::vector<Selector>& exclude_;
  std::string out_;
};

void collect_matching(const Node& node, const std::vector<Selector>& sels,
                      std::vector<const Node*>& out) {
  if (matches_any(sels, node)) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_matching(*child, sels, out);
}

const Node* find_main(const Node& node) {
  if (is_dropped(node)) return nullptr;
  if (node.tag == "main" || node.role == "main") return &node;
  for (const auto& child : node.children) {
    if (const Node* found = find_main(*child)) return found;
  }
  return nullptr;
}

std::vector<Selector> parse_selectors(const json& arr, std::string_view platform) {
  std::vector<Selector> out;
  if (!arr.is_array()) {
    throw Error(ErrorCode::kParse, "extraction rules for " +
                                       std::string(platform) +
                                       " must be arrays of selectors");
  }
  for (const json& s : arr) out.push_back(Selector::parse(s.get<std::string>()));
  return out;
}

}  // namespace

Selector Selector::parse(std::string_view text) {
  Selector sel;
  std::string_view s = text;
  while (!s.empty() && is_space_byte(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space_byte(s.back())) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty selector");
  auto ident_end = [&](size_t from) {
    size_t i = from;
    while (i < s.size() && s[i] != '.' && s[i] != '#') {
      if (is_space_byte(s[i]) || s[i] == '>' || s[i] == '[') {
        throw Error(ErrorCode::kParse, "unsupported selector \"" +
                                           std::string(text) + "\"");
      }
      ++i;
    }
    return i;
  };
  size_t i = ident_end(0);
  sel.tag = fold_case(s.substr(0, i));
  while (i < s.size()) {
    char kind = s[i];
    size_t end = ident_end(i + 1);
    std::string ident(s.substr(i + 1, end - i - 1));
    if (ident.empty()) {
      throw Error(ErrorCode::kParse, "bad selector \"" + std::string(text) + "\"");
    }
    if (kind == '#') {
      sel.id = ident;
    } else {
      sel.classes.push_back(ident);
    }
    i = end;
  }
  return sel;
}

ExtractionConfig ExtractionConfig::from_json(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kParse, "extraction config must be a JSON object");
  }
  ExtractionConfig config;
  for (const auto& [platform, rules] : j.items()) {
    ExtractionRules r;
    if (rules.contains("include")) r.include = parse_selectors(rules["include"], platform);
    if (rules.contains("exclude")) r.exclude = parse_selectors(rules["exclude"], platform);
    config.rules_.emplace(platform, std::move(r));
  }
  return config;
}

ExtractionConfig ExtractionConfig::from_file(const std::filesystem::path& path) {
  try {
    return from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                "malformed extraction config " + path.string() + ": " + e.what());
  }
}

const ExtractionRules* ExtractionConfig::rules_for(std::string_view platform) const {
  auto it = rules_.find(platform);
  return it == rules_.end() ? nullptr : &it->second;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_blank = false;
  bool have_line = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    std::string collapsed;
    bool space = false;
    for (size_t i = 0; i < line.size();) {
      auto [cp, len] = decode_utf8(line, i);
      bool blank = (cp < 0x80 && is_space_byte(static_cast<char>(cp))) ||
                   cp == 0xA0 || (cp >= 0x2000 && cp <= 0x200A) ||
                   cp == 0x202F || cp == 0x205F || cp == 0x3000;
      if (blank) {
        space = !collapsed.empty();
      } else {
        if (space) collapsed.push_back(' ');
        space = false;
        collapsed.append(line.substr(i, len));
      }
      i += len;
    }
    if (collapsed.empty()) {
      pending_blank = have_line;
    } else {
      if (have_line) out += pending_blank ? "\n\n" : "\n";
      out += collapsed;
      have_line = true;
      pending_blank = false;
    }
    pos = nl + 1;
  }
  return out;
}

std::string extract_html_text(std::string_view html, const ExtractionRules* rules) {
  std::unique_ptr<Node> root = Parser(html).parse();
  static const std::vector<Selector> kNoSelectors;
  const std::vector<Selector>& exclude = rules ? rules->exclude : kNoSelectors;
  Renderer renderer(exclude);

  std::vector<const Node*> roots;
  if (rules && !rules->include.empty()) {
    collect_matching(*root, rules->include, roots);
  } else if (const Node* main = find_main(*root)) {
    roots.push_back(main);
  } else {
    roots.push_back(root.get());
  }
  for (const Node* n : roots) {
    if (n->tag == "#root") {
      for (const auto& child : n->children) renderer.render(*child);
    } else {
      // The selected root itself is kept even if it is a dropped tag.
      renderer.paragraph_break();
      for (const auto& child : n->children) renderer.render(*child);
      renderer.paragraph_break();
    }
  }
  return normalize_whitespace(renderer.take());
}

std::string extract_text(std::string_view payload, MediaKind kind,
                         const ExtractionRules* rules) {
  if (payload.empty()) throw Error(ErrorCode::kEmptyDocument, "empty document");
  std::string clean = sanitize_utf8(payload);
  if (clean.starts_with("\xEF\xBB\xBF")) clean.erase(0, 3);
  if (kind == MediaKind::kHtml) return extract_html_text(clean, rules);
  std::string unified;
  unified.reserve(clean.size());
  for (size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] == '\r') {
      unified.push_back('\n');
      if (i + 1 < clean.size() && clean[i + 1] == '\n') ++i;
    } else {
      unified.push_back(clean[i]);
    }
  }
  return normalize_whitespace(unified);
}

std::string extract_text(std::string_view payload, MediaKind kind,
                         const ExtractionConfig& config,
                         std::string_view platform) {
  return extract_text(payload, kind, config.rules_for(platform));
}

}  // namespace tosaudit
