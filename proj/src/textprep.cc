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

#include "tosaudit/textprep.h"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "tosaudit/corpus.h"
#include "tosaudit/error.h"
#include "tosaudit/unicode.h"

namespace tosaudit {

namespace {

constexpr std::array<std::string_view, 11> kAbbreviations = {
    "inc.", "ltd.", "corp.", "e.g.", "i.e.", "etc.",
    "no.",  "u.s.", "v.",    "mr.",  "dr."};

bool is_closing(char32_t cp) {
  switch (cp) {
    case ')': case ']': case '}': case '"': case '\'':
    case 0x201D: case 0x2019: case 0x00BB:
      return true;
    default:
      return false;
  }
}

bool is_opening_quote(char32_t cp) {
  switch (cp) {
    case '"': case '\'': case 0x201C: case 0x2018: case 0x00AB:
      return true;
    default:
      return false;
  }
}

bool is_roman(std::string_view s) {
  if (s.empty() || s.size() > 5) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::string_view("ivxlcIVXLC").find(c) != std::string_view::npos;
  });
}

// "1", "2.1", "a", "iv", optionally wrapped in parentheses.
bool is_enumerator(std::string_view s) {
  if (s.size() > 10) return false;
  if (!s.empty() && s.front() == '(') s.remove_prefix(1);
  if (!s.empty() && s.back() == ')') s.remove_suffix(1);
  if (s.empty()) return false;
  if (s.size() == 1 && is_ascii_alpha(s[0])) return true;
  if (is_roman(s)) return true;
  bool digit_seen = false;
  for (char c : s) {
    if (is_ascii_digit(c)) {
      digit_seen = true;
    } else if (c != '.') {
      return false;
    }
  }
  return digit_seen && s.front() != '.';
}

std::string_view trim(std::string_view s) {
  size_t b = 0;
  while (b < s.size() && is_space_byte(s[b])) ++b;
  size_t e = s.size();
  while (e > b && is_space_byte(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Whether the '.' at `dot` closes an abbreviation like "Inc." or "e.g.".
bool ends_abbreviation(std::string_view text, size_t seg_start, size_t dot) {
  size_t b = dot;
  while (b > seg_start && !is_space_byte(text[b - 1])) --b;
  std::string_view chunk = text.substr(b, dot + 1 - b);
  while (!chunk.empty() &&
         std::string_view("(\"'[").find(chunk.front()) != std::string_view::npos) {
    chunk.remove_prefix(1);
  }
  std::string folded = fold_case(chunk);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), folded) !=
         kAbbreviations.end();
}

// Offset of the blank line starting at `pos` ("\n", optional blanks, "\n"),
// or npos.
size_t paragraph_break_end(std::string_view text, size_t pos) {
  if (text[pos] != '\n') return std::string_view::npos;
  size_t k = pos + 1;
  while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) ++k;
  if (k < text.size() && text[k] == '\n') return k + 1;
  return std::string_view::npos;
}

size_t skip_spaces(std::string_view text, size_t pos) {
  while (pos < text.size() && is_space_byte(text[pos])) ++pos;
  return pos;
}

size_t trim_end(std::string_view text, size_t begin, size_t end) {
  while (end > begin && is_space_byte(text[end - 1])) --end;
  return end;
}

}  // namespace

std::string fold_case(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::size_t count_letters(std::string_view token) {
  std::size_t n = 0;
  for (size_t i = 0; i < token.size();) {
    auto [cp, len] = decode_utf8(token, i);
    if (is_letter(cp)) ++n;
    i += len;
  }
  return n;
}

std::size_t count_alnum(std::string_view token) {
  std::size_t n = 0;
  for (size_t i = 0; i < token.size();) {
    auto [cp, len] = decode_utf8(token, i);
    if (is_letter(cp) || is_digit(cp)) ++n;
    i += len;
  }
  return n;
}

std::vector<Token> tokenize_words(std::string_view text, std::size_t base_offset) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = decode_utf8(text, i);
    if (!is_word_char(cp)) {
      i += len;
      continue;
    }
    size_t start = i;
    size_t end = i + len;
    while (end < text.size()) {
      auto [next, nlen] = decode_utf8(text, end);
      if (is_word_char(next)) {
        end += nlen;
        continue;
      }
      if (is_joiner(next) && end + nlen < text.size()) {
        auto [after, alen] = decode_utf8(text, end + nlen);
        if (is_word_char(after)) {
          end += nlen + alen;
          continue;
        }
      }
      break;
    }
    tokens.push_back(Token{std::string(text.substr(start, end - start)),
                           CharSpan{base_offset + start, base_offset + end}});
    i = end;
  }
  return tokens;
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  std::vector<CharSpan> spans;
  size_t start = skip_spaces(text, 0);

  auto emit = [&](size_t end) {
    end = trim_end(text, start, end);
    if (end > start) spans.push_back(CharSpan{start, end});
  };

  size_t i = start;
  while (i < text.size()) {
    size_t para_end = paragraph_break_end(text, i);
    if (para_end != std::string_view::npos) {
      emit(i);
      start = skip_spaces(text, para_end);
      i = start;
      continue;
    }
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < text.size()) {
      auto [cp, len] = decode_utf8(text, j);
      if (cp == '.' || cp == '!' || cp == '?' || is_closing(cp)) {
        j += len;
      } else {
        break;
      }
    }
    if (j >= text.size()) {
      emit(j);
      start = j;
      i = j;
      break;
    }
    if (!is_space_byte(text[j])) {
      i = j;
      continue;
    }
    size_t k = skip_spaces(text, j);
    if (k >= text.size()) {
      emit(j);
      start = k;
      i = k;
      break;
    }
    auto [next, nlen] = decode_utf8(text, k);
    (void)nlen;
    bool starts_sentence = is_upper(next) || is_opening_quote(next) || is_digit(next);
    bool suppressed = false;
    if (c == '.' && j == i + 1) {
      suppressed = ends_abbreviation(text, start, i) ||
                   is_enumerator(trim(text.substr(start, i - start)));
    }
    if (starts_sentence && !suppressed) {
      emit(j);
      start = k;
      i = k;
    } else {
      i = j;
    }
  }
  if (start < text.size()) emit(text.size());

  // Segments without a word token are folded into the following sentence,
  // or into the previous one at the end of the text.
  std::vector<Sentence> sentences;
  std::optional<size_t> pending_start;
  for (const CharSpan& span : spans) {
    CharSpan s = span;
    if (pending_start) s.start = *pending_start;
    std::string_view body = text.substr(s.start, s.end - s.start);
    std::vector<Token> tokens = tokenize_words(body, s.start);
    if (tokens.empty()) {
      pending_start = s.start;
      continue;
    }
    pending_start.reset();
    Sentence sentence;
    sentence.index = sentences.size();
    sentence.text = std::string(body);
    sentence.tokens = std::move(tokens);
    sentence.span = s;
    sentences.push_back(std::move(sentence));
  }
  if (pending_start && !sentences.empty()) {
    Sentence& last = sentences.back();
    last.span.end = spans.back().end;
    last.text = std::string(text.substr(last.span.start, last.span.end - last.span.start));
  }
  return sentences;
}

std::size_t count_syllables(std::string_view word) {
  if (word.empty()) return 0;
  std::string w = fold_case(word);

  std::size_t total = 0;
  auto count_part = [&](std::string_view part) {
    if (part.empty()) return;
    bool has_letter = false;
    bool has_digit = false;
    std::size_t groups = 0;
    bool in_vowel = false;
    for (size_t i = 0; i < part.size();) {
      auto [cp, len] = decode_utf8(part, i);
      if (is_letter(cp)) has_letter = true;
      if (is_digit(cp)) has_digit = true;
      bool vowel = cp < 0x80 && is_ascii_vowel_y(static_cast<char>(cp));
      if (vowel && !in_vowel) ++groups;
      in_vowel = vowel;
      i += len;
    }
    if (!has_letter) {
      total += has_digit ? 1 : 0;
      return;
    }
    // Drop possessive "'s" before looking at the ending.
    std::string_view stem = part;
    if (stem.size() > 2 && stem.ends_with("'s")) stem.remove_suffix(2);
    size_t n = stem.size();
    if (groups > 0 && n >= 2 && stem[n - 1] == 'e' &&
        is_ascii_consonant(stem[n - 2])) {
      bool consonant_le = stem[n - 2] == 'l' && n >= 3 && is_ascii_consonant(stem[n - 3]);
      if (!consonant_le) --groups;
    }
    total += std::max<std::size_t>(groups, 1);
  };

  size_t part_start = 0;
  for (size_t i = 0; i < w.size();) {
    auto [cp, len] = decode_utf8(w, i);
    if (cp == '-' || cp == 0x2010 || cp == 0x2011) {
      count_part(std::string_view(w).substr(part_start, i - part_start));
      part_start = i + len;
    }
    i += len;
  }
  count_part(std::string_view(w).substr(part_start));
  return total;
}

SyllableCounter SyllableCounter::parse(std::string_view contents) {
  std::map<std::string, std::size_t> exceptions;
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    size_t tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "syllable exceptions line " + std::to_string(line_no) +
                      ": expected word<TAB>count");
    }
    std::string word = fold_case(trim(body.substr(0, tab)));
    std::string count = std::string(trim(body.substr(tab + 1)));
    if (word.empty() || count.empty() ||
        !std::all_of(count.begin(), count.end(), is_ascii_digit)) {
      throw Error(ErrorCode::kParse, "syllable exceptions line " +
                                         std::to_string(line_no) + ": bad entry");
    }
    exceptions[word] = static_cast<std::size_t>(std::stoul(count));
  }
  return SyllableCounter(std::move(exceptions));
}

SyllableCounter SyllableCounter::from_file(const std::filesystem::path& path) {
  return parse(read_file(path));
}

std::size_t SyllableCounter::count(std::string_view word) const {
  if (!exceptions_.empty()) {
    auto it = exceptions_.find(fold_case(word));
    if (it != exceptions_.end()) return it->second;
  }
  return count_syllables(word);
}

DocStats compute_doc_stats(const std::vector<Sentence>& sentences,
                           const SyllableCounter& counter) {
  DocStats s;
  for (const Sentence& sentence : sentences) {
    if (sentence.tokens.empty()) continue;
    ++s.sentence_count;
    for (const Token& t : sentence.tokens) {
      ++s.word_count;
      std::size_t syl = counter.count(t.text);
      s.syllable_count += syl;
      s.letter_count += count_letters(t.text);
      s.character_count += count_alnum(t.text);
      if (syl >= kHardWordSyllables) {
        ++s.hard_word_count;
      } else {
        ++s.easy_word_count;
      }
    }
  }
  s.complex_word_count = s.hard_word_count;
  s.polysyllable_count = s.hard_word_count;
  s.degenerate = s.word_count == 0 || s.sentence_count == 0;
  if (!s.degenerate) {
    double words = static_cast<double>(s.word_count);
    s.letters_per_100_words = 100.0 * static_cast<double>(s.letter_count) / words;
    s.sentences_per_100_words = 100.0 * static_cast<double>(s.sentence_count) / words;
  }
  return s;
}

Document build_document(std::string platform, std::string text,
                        const SyllableCounter& counter) {
  Document doc;
  doc.platform = std::move(platform);
  doc.text = std::move(text);
  doc.sentences = segment_sentences(doc.text);
  doc.stats = compute_doc_stats(doc.sentences, counter);
  return doc;
}

}  // namespace tosaudit
