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

// Published per-platform figures used as reference data by the tests.

#ifndef TOSAUDIT_TESTS_PUBLISHED_TABLES_H_
#define TOSAUDIT_TESTS_PUBLISHED_TABLES_H_

#include <array>
#include <cstddef>

namespace tosaudit::testing {

// Readability scores with their shaded band (e easy, m moderate, h hard),
// in Flesch-RE, Fog, F-K, CLI, SMOG, Lensear, ARI order.
struct PublishedReadability {
  const char* platform;
  std::array<double, 7> scores;
  const char* bands;
};

inline constexpr PublishedReadability kPublishedReadability[] = {
    {"BlueSky", {40.2, 16.2, 13.4, 12.4, 14.9, 11.3, 14.9}, "mhhmhmh"},
    {"Instagram", {43.4, 15.2, 12.5, 11.3, 14.2, 10.2, 13.2}, "mhmmhmh"},
    {"LinkedIn", {36.4, 17.4, 14.6, 11.8, 15.6, 13.8, 15.8}, "mhhmhhh"},
    {"Mastodon", {46.5, 13.4, 11.8, 10.9, 13.7, 10.7, 12.2}, "mhmmhmm"},
    {"Meta", {37.7, 17.3, 14.9, 11.6, 15.3, 13.8, 16.2}, "mhhmhhh"},
    {"Pinterest", {43.9, 15.1, 12.9, 11.1, 13.9, 11.8, 13.7}, "mhmmhmh"},
    {"Reddit", {31.8, 19.2, 16.0, 11.9, 16.9, 10.3, 17.3}, "mhhmhmh"},
    {"Spotify", {23.6, 22.1, 18.5, 13.0, 18.7, 24.7, 20.6}, "hhhhhhh"},
    {"TikTok", {28.9, 20.3, 17.3, 12.0, 17.4, 16.8, 18.9}, "hhhmhhh"},
    {"Tumblr", {29.7, 19.3, 16.3, 12.7, 17.0, 6.9, 17.9}, "hhhmheh"},
    {"WhatsApp", {28.1, 19.6, 16.6, 12.5, 17.3, 42.5, 17.8}, "hhhmhhh"},
    {"X", {29.0, 19.7, 16.6, 12.5, 17.3, 22.3, 18.3}, "hhhmhhh"},
    {"YouTube", {36.3, 17.9, 15.4, 12.0, 15.6, 5.3, 17.2}, "mhhmheh"},
};

// Vague-term counts: words, occurrences, density percent, distinct terms.
struct PublishedClarity {
  const char* platform;
  std::size_t words;
  std::size_t count;
  double density;
  std::size_t unique;
};

inline constexpr PublishedClarity kPublishedClarity[] = {
    {"BlueSky", 3779, 121, 3.20, 18},   {"Instagram", 3296, 138, 4.19, 18},
    {"LinkedIn", 5073, 364, 7.18, 22},  {"Mastodon", 2088, 103, 4.93, 13},
    {"Meta", 5443, 231, 4.24, 20},      {"Pinterest", 4819, 138, 2.86, 19},
    {"Reddit", 7503, 396, 5.28, 18},    {"Spotify", 6110, 218, 3.57, 19},
    {"TikTok", 7497, 299, 3.99, 17},    {"Tumblr", 5934, 257, 4.33, 21},
    {"WhatsApp", 5320, 271, 5.09, 17},  {"X", 4348, 246, 5.66, 21},
    {"YouTube", 3923, 134, 3.42, 18},
};

// Post-review specificity counts with automatic values where a reviewer
// changed them, and the published sub-scores and composite.
struct PublishedSpecificity {
  const char* platform;
  std::size_t dt, en, re;
  std::size_t sg_auto, sg;
  std::size_t ss_auto, ss;
  std::array<int, 4> sub;  // DT_s, EN_s, R_s, S_s
  double composite;
};

inline constexpr PublishedSpecificity kPublishedSpecificity[] = {
    {"Bluesky", 10, 4, 0, 0, 0, 5, 2, {2, 2, 0, 1}, 1.25},
    {"Instagram", 11, 4, 0, 3, 2, 5, 3, {2, 2, 0, 2}, 1.5},
    {"LinkedIn", 14, 5, 0, 0, 0, 4, 1, {2, 2, 0, 1}, 1.25},
    {"Mastodon", 6, 2, 0, 0, 0, 4, 1, {2, 1, 0, 1}, 1.0},
    {"Meta", 15, 5, 0, 5, 3, 8, 4, {2, 2, 0, 2}, 1.5},
    {"Pinterest", 13, 3, 0, 1, 1, 4, 1, {2, 2, 0, 1}, 1.25},
    {"Reddit", 13, 3, 0, 0, 0, 2, 0, {2, 2, 0, 0}, 1.0},
    {"Spotify", 8, 4, 0, 0, 0, 10, 2, {2, 2, 0, 1}, 1.25},
    {"TikTok", 15, 11, 0, 0, 0, 5, 1, {2, 2, 0, 1}, 1.25},
    {"Tumblr", 13, 6, 0, 0, 0, 4, 1, {2, 2, 0, 1}, 1.25},
    {"WhatsApp", 13, 5, 2, 6, 1, 4, 4, {2, 2, 2, 2}, 2.0},
    {"X", 16, 1, 0, 1, 1, 2, 0, {2, 1, 0, 1}, 1.0},
    {"YouTube", 9, 5, 0, 0, 0, 3, 0, {2, 2, 0, 0}, 1.0},
};

// Platforms of the consent-interface table; every row scored 0,0,0,1,1.
inline constexpr const char* kInterfacePlatforms[] = {
    "BlueSky", "Instagram", "LinkedIn", "Mastodon", "Meta", "Pinterest", "Reddit",
    "Spotify", "TikTok", "Tumblr", "WhatsApp", "X", "YouTube",
};

}  // namespace tosaudit::testing

#endif  // TOSAUDIT_TESTS_PUBLISHED_TABLES_H_
