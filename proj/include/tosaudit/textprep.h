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

// Plain text to Document: sentence segmentation, word tokenization,
// syllable counting and the document statistics the readability formulas
// consume.
//
// Tokens are maximal runs of letters/digits; an apostrophe or hyphen is kept
// when it sits between two such characters ("third-party", "don't").
//
// A sentence ends at '.', '!' or '?' (plus any closing quotes/brackets) when
// followed by whitespace and then an uppercase letter, a quote or a digit.
// No split happens after a listed abbreviation ("Inc.", "e.g.", "U.S.") or
// after a bare enumerator such as "1." or "(a)". A blank line always ends a
// sentence so headings do not run into the paragraph below them.

#ifndef TOSAUDIT_TEXTPREP_H_
#define TOSAUDIT_TEXTPREP_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tosaudit {

// Half-open byte range [start, end) into Document::text.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool contains(const CharSpan& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const CharSpan& other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string text;
  CharSpan span;
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::vector<Token> tokens;  // spans are document offsets
  CharSpan span;
};

struct DocStats {
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;
  std::size_t syllable_count = 0;
  std::size_t letter_count = 0;     // alphabetic code points in tokens
  std::size_t character_count = 0;  // alphanumeric code points in tokens
  std::size_t complex_word_count = 0;
  std::size_t polysyllable_count = 0;
  std::size_t easy_word_count = 0;
  std::size_t hard_word_count = 0;
  double letters_per_100_words = 0.0;
  double sentences_per_100_words = 0.0;
  bool degenerate = true;  // no words or no sentences

  friend bool operator==(const DocStats&, const DocStats&) = default;
};

struct Document {
  std::string platform;
  std::string text;
  std::vector<Sentence> sentences;
  DocStats stats;
};

// Words with at least this many syllables are complex / polysyllabic / hard.
inline constexpr std::size_t kHardWordSyllables = 3;

std::vector<Token> tokenize_words(std::string_view text,
                                  std::size_t base_offset = 0);

std::vector<Sentence> segment_sentences(std::string_view text);

// Vowel-group heuristic: groups of a/e/i/o/u/y, minus a final silent 'e'
// (kept for consonant+"le"), at least one per hyphen-separated part that
// contains a letter. Digit-only tokens count as one syllable.
std::size_t count_syllables(std::string_view word);

// Syllable counting with an optional per-word override dictionary.
class SyllableCounter {
 public:
  SyllableCounter() = default;
  explicit SyllableCounter(std::map<std::string, std::size_t> exceptions)
      : exceptions_(std::move(exceptions)) {}

  // Format: "word<TAB>count" per line, '#' starts a comment.
  static SyllableCounter from_file(const std::filesystem::path& path);
  static SyllableCounter parse(std::string_view contents);

  std::size_t count(std::string_view word) const;
  std::size_t exception_count() const { return exceptions_.size(); }

 private:
  std::map<std::string, std::size_t> exceptions_;  // lowercase keys
};

DocStats compute_doc_stats(const std::vector<Sentence>& sentences,
                           const SyllableCounter& counter = {});

Document build_document(std::string platform, std::string text,
                        const SyllableCounter& counter = {});

// ASCII lowercase; other bytes are left as they are.
std::string fold_case(std::string_view s);

// Number of Unicode code points that are letters / letters-or-digits.
std::size_t count_letters(std::string_view token);
std::size_t count_alnum(std::string_view token);

}  // namespace tosaudit

#endif  // TOSAUDIT_TEXTPREP_H_
