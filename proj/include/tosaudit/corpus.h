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

// Snapshot corpus: fetches ToS documents, stores them content-addressed
// under a corpus root and keeps a JSON manifest of every snapshot.
//
// Layout:
//   <root>/manifest.json
//   <root>/payloads/<platform>/<sha256>.<html|txt>

#ifndef TOSAUDIT_CORPUS_H_
#define TOSAUDIT_CORPUS_H_

#include <chrono>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace tosaudit {

enum class MediaKind { kHtml, kPlainText };

std::string_view to_string(MediaKind kind);
MediaKind media_kind_from_string(std::string_view s);

struct SnapshotEntry {
  std::string platform;
  std::string source_url;
  std::string retrieved_at;    // UTC, "YYYY-MM-DDTHH:MM:SSZ"
  std::string content_digest;  // lowercase hex SHA-256 of the payload
  std::string payload_path;    // relative to the corpus root
  MediaKind media_kind = MediaKind::kHtml;
  // Fields found on disk that this version does not know about. Written
  // back unchanged.
  nlohmann::json extra = nlohmann::json::object();
};

struct CorpusManifest {
  static constexpr int kSchemaVersion = 1;

  std::vector<SnapshotEntry> entries;
  std::string created_at;
  int schema_version = kSchemaVersion;
  nlohmann::json extra = nlohmann::json::object();
};

struct FetchedSnapshot {
  SnapshotEntry entry;
  std::string payload;
};

struct ChangeSummary {
  bool changed = false;
  std::string old_digest;
  std::string new_digest;
  std::string old_retrieved_at;
  std::string new_retrieved_at;
};

struct StoreResult {
  CorpusManifest manifest;
  SnapshotEntry entry;  // as stored, payload_path filled in
  bool already_stored = false;
};

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

std::string utc_now_iso8601();

// True for syntactically valid http(s) URLs with a non-empty host.
bool is_http_url(std::string_view url);
// Host part of an http(s) URL ("" when not parseable).
std::string url_host(std::string_view url);

// Platform ids double as directory names, so they are limited to
// [A-Za-z0-9._-] and must not start with '.'.
bool is_valid_platform_id(std::string_view platform);

struct FetchOptions {
  std::chrono::seconds timeout{30};
  std::string user_agent = "tosaudit/1.0 (+terms-of-service research)";
};

// GET `url`, following redirects. Throws Error with kNetwork, kTimeout or
// kHttpStatus; every message names the URL.
FetchedSnapshot fetch_snapshot(std::string_view platform, std::string_view url,
                               const FetchOptions& options);

// Builds a snapshot from a local file; source_url becomes file://<abs>.
FetchedSnapshot read_local_snapshot(std::string_view platform,
                                    const std::filesystem::path& file,
                                    std::optional<MediaKind> kind);

// Writes `payload` atomically under `root` and returns the manifest with the
// entry appended. A (platform, digest) pair already present is a no-op with
// already_stored set. Throws kDigestMismatch if entry.content_digest does
// not describe `payload`, and kValidation when retrieved_at would move
// backwards for the platform.
StoreResult store_snapshot(const std::filesystem::path& root,
                           const CorpusManifest& manifest, SnapshotEntry entry,
                           std::string_view payload);

ChangeSummary diff_snapshots(const SnapshotEntry& old_entry,
                             const SnapshotEntry& new_entry);

nlohmann::json to_json(const CorpusManifest& manifest);
CorpusManifest manifest_from_json(const nlohmann::json& j);

// Missing manifest.json yields an empty manifest stamped with the current
// time.
CorpusManifest load_manifest(const std::filesystem::path& root);
void save_manifest(const std::filesystem::path& root,
                   const CorpusManifest& manifest);

// Throws kDigestMismatch when the stored bytes no longer hash to the entry.
std::string read_payload(const std::filesystem::path& root,
                         const SnapshotEntry& entry);
// digest(read(payload_path)) == content_digest.
bool verify_entry(const std::filesystem::path& root, const SnapshotEntry& entry);

// Most recent entry per platform, sorted by platform.
std::vector<SnapshotEntry> latest_snapshots(const CorpusManifest& manifest);

// Writes via a sibling temp file and rename().
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

// Single mutation point for a corpus directory. Safe to call store() from
// several fetch threads.
class CorpusStore {
 public:
  explicit CorpusStore(std::filesystem::path root);

  StoreResult store(const SnapshotEntry& entry, std::string_view payload);
  CorpusManifest manifest() const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
  mutable std::mutex mu_;
  CorpusManifest manifest_;
};

struct CorpusSource {
  std::string platform;
  std::string url;                  // http(s) source
  std::optional<std::string> file;  // local source, relative to the config
  std::optional<MediaKind> media_kind;
};

struct CorpusConfig {
  std::string corpus_dir = "corpus";
  std::string user_agent = FetchOptions{}.user_agent;
  double request_delay_seconds = 1.0;
  int timeout_seconds = 30;
  std::vector<CorpusSource> sources;
  std::filesystem::path base_dir;  // directory of the config file
};

CorpusConfig load_corpus_config(const std::filesystem::path& path);

struct FetchFailure {
  std::string platform;
  std::string message;
};

using FetchOutcome = std::variant<FetchedSnapshot, FetchFailure>;

// Fetches every source (or only `only_platform`). Distinct hosts run
// concurrently; requests to one host are spaced by the configured delay.
// Outcomes are returned in config order.
std::vector<FetchOutcome> fetch_all(
    const CorpusConfig& config,
    const std::optional<std::string>& only_platform = std::nullopt);

}  // namespace tosaudit

#endif  // TOSAUDIT_CORPUS_H_
