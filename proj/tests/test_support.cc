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

#include "test_support.h"

#include <sys/wait.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <random>
#include <unistd.h>

namespace tosaudit::testing {

std::filesystem::path source_dir() { return TOSAUDIT_SOURCE_DIR; }
std::filesystem::path lexicon_dir() { return source_dir() / "data" / "lexicons"; }
std::filesystem::path fixture_dir() { return source_dir() / "tests" / "fixtures"; }
std::filesystem::path cli_path() { return TOSAUDIT_CLI_PATH; }

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("tosaudit_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + "_" + std::to_string(rd()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string plant_terms(std::mt19937& rng, std::size_t filler_words,
                        const std::vector<std::string>& planted) {
  static const char* const kFiller[] = {"apple", "river", "stone",  "green", "table",
                                        "window", "garden", "music", "cloud", "yellow",
                                        "bridge", "orange", "paper", "lamp",  "forest"};
  // Slots between filler words; each planted phrase takes a distinct slot
  // that is not next to another used slot.
  std::size_t slots = filler_words + 1;
  std::vector<bool> used(slots, false);
  std::vector<std::vector<std::string>> at(slots);
  for (const std::string& phrase : planted) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::size_t s = rng() % slots;
      if (used[s]) continue;
      used[s] = true;
      at[s].push_back(phrase);
      break;
    }
  }
  std::string out;
  auto append = [&out](const std::string& w) {
    if (!out.empty()) out += ' ';
    out += w;
  };
  for (std::size_t i = 0; i < slots; ++i) {
    for (const std::string& p : at[i]) append(p);
    if (i < filler_words) append(kFiller[rng() % std::size(kFiller)]);
  }
  return out + ".";
}

CommandResult run_cli(const std::string& args) {
  CommandResult r;
  std::string cmd = "'" + cli_path().string() + "' " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace tosaudit::testing
