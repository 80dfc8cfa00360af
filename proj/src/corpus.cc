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

#include "tosaudit/corpus.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "httplib.h"
#include "tosaudit/error.h"

namespace tosaudit {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* const kEntryFields[] = {"platform",       "source_url",
                                    "retrieved_at",   "content_digest",
                                    "payload_path",   "media_kind"};
const char* const kManifestFields[] = {"entries", "created_at",
                                       "schema_version"};

struct ParsedUrl {
  std::string scheme;
  std::string host_port;  // host[:port]
  std::string host;
  std::string path;       // always starts with '/'
};

std::optional<ParsedUrl> parse_url(std::string_view url) {
  ParsedUrl out;
  std::string_view rest;
  if (url.starts_with("http://")) {
    out.scheme = "http";
    rest = url.substr(7);
  } else if (url.starts_with("https://")) {
    out.scheme = "https";
    rest = url.substr(8);
  } else {
    return std::nullopt;
  }
  size_t slash = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, slash);
  if (authority.empty() || authority.find('@') != std::string_view::npos ||
      authority.find_first_of(" \t\r\n") != std::string_view::npos) {
    return std::nullopt;
  }
  out.host_port = std::string(authority);
  size_t colon = authority.rfind(':');
  out.host = std::string(authority.substr(0, colon));
  if (out.host.empty()) return std::nullopt;
  if (colon != std::string_view::npos) {
    std::string_view port = authority.substr(colon + 1);
    if (port.empty() || !std::all_of(port.begin(), port.end(), ::isdigit)) {
      return std::nullopt;
    }
  }
  if (slash == std::string_view::npos) {
    out.path = "/";
  } else {
    out.path = std::string(rest.substr(slash));
    if (out.path.front() != '/') out.path.insert(out.path.begin(), '/');
  }
  return out;
}

std::string extension_for(MediaKind kind) {
  return kind == MediaKind::kHtml ? "html" : "txt";
}

json entry_to_json(const SnapshotEntry& e) {
  json j = e.extra.is_object() ? e.extra : json::object();
  j["platform"] = e.platform;
  j["source_url"] = e.source_url;
  j["retrieved_at"] = e.retrieved_at;
  j["content_digest"] = e.content_digest;
  j["payload_path"] = e.payload_path;
  j["media_kind"] = std::string(to_string(e.media_kind));
  return j;
}

SnapshotEntry entry_from_json(const json& j) {
  SnapshotEntry e;
  e.platform = j.at("platform").get<std::string>();
  e.source_url = j.at("source_url").get<std::string>();
  e.retrieved_at = j.at("retrieved_at").get<std::string>();
  e.content_digest = j.at("content_digest").get<std::string>();
  e.payload_path = j.at("payload_path").get<std::string>();
  e.media_kind = media_kind_from_string(j.at("media_kind").get<std::string>());
  e.extra = j;
  for (const char* f : kEntryFields) e.extra.erase(f);
  return e;
}

MediaKind guess_kind_from_content_type(std::string_view content_type) {
  return content_type.find("html") != std::string_view::npos
             ? MediaKind::kHtml
             : MediaKind::kPlainText;
}

MediaKind guess_kind_from_path(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
  return (ext == ".html" || ext == ".htm" || ext == ".xhtml")
             ? MediaKind::kHtml
             : MediaKind::kPlainText;
}

}  // namespace

std::string_view to_string(MediaKind kind) {
  return kind == MediaKind::kHtml ? "html" : "plain_text";
}

MediaKind media_kind_from_string(std::string_view s) {
  if (s == "html") return MediaKind::kHtml;
  if (s == "plain_text") return MediaKind::kPlainText;
  throw Error(ErrorCode::kParse, "unknown media_kind \"" + std::string(s) + "\"");
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string utc_now_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool is_http_url(std::string_view url) { return parse_url(url).has_value(); }

std::string url_host(std::string_view url) {
  auto parsed = parse_url(url);
  return parsed ? parsed->host : std::string();
}

bool is_valid_platform_id(std::string_view platform) {
  if (platform.empty() || platform.front() == '.') return false;
  return std::all_of(platform.begin(), platform.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
           c == '_' || c == '-';
  });
}

FetchedSnapshot fetch_snapshot(std::string_view platform, std::string_view url,
                               const FetchOptions& options) {
  auto parsed = parse_url(url);
  if (!parsed) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid http(s) url: " + std::string(url));
  }
  const std::string url_str(url);
  httplib::Client client(parsed->scheme + "://" + parsed->host_port);
  client.set_follow_location(true);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  httplib::Headers headers = {{"User-Agent", options.user_agent}};

  auto started = std::chrono::steady_clock::now();
  httplib::Result res = client.Get(parsed->path, headers);
  auto elapsed = std::chrono::steady_clock::now() - started;

  if (!res) {
    httplib::Error err = res.error();
    // httplib reports an expired read timeout as a plain read error.
    bool timed_out =
        err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read &&
         elapsed >= options.timeout - std::chrono::milliseconds(100));
    if (timed_out) {
      throw Error(ErrorCode::kTimeout,
                  "timeout after " + std::to_string(options.timeout.count()) +
                      "s: " + url_str);
    }
    throw Error(ErrorCode::kNetwork,
                "network failure (" + httplib::to_string(err) + "): " + url_str);
  }
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorCode::kHttpStatus,
                "http status " + std::to_string(res->status) + ": " + url_str);
  }

  FetchedSnapshot out;
  out.payload = res->body;
  out.entry.platform = std::string(platform);
  out.entry.source_url = url_str;
  out.entry.retrieved_at = utc_now_iso8601();
  out.entry.content_digest = sha256_hex(out.payload);
  out.entry.media_kind =
      guess_kind_from_content_type(res->get_header_value("Content-Type"));
  return out;
}

FetchedSnapshot read_local_snapshot(std::string_view platform,
                                    const fs::path& file,
                                    std::optional<MediaKind> kind) {
  FetchedSnapshot out;
  out.payload = read_file(file);
  out.entry.platform = std::string(platform);
  out.entry.source_url = "file://" + fs::absolute(file).lexically_normal().string();
  out.entry.retrieved_at = utc_now_iso8601();
  out.entry.content_digest = sha256_hex(out.payload);
  out.entry.media_kind = kind.value_or(guess_kind_from_path(file));
  return out;
}

StoreResult store_snapshot(const fs::path& root, const CorpusManifest& manifest,
                           SnapshotEntry entry, std::string_view payload) {
  if (!is_valid_platform_id(entry.platform)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid platform id \"" + entry.platform + "\"");
  }
  if (sha256_hex(payload) != entry.content_digest) {
    throw Error(ErrorCode::kDigestMismatch,
                "digest mismatch for " + entry.platform);
  }
  StoreResult result{manifest, entry, false};
  for (const SnapshotEntry& e : manifest.entries) {
    if (e.platform != entry.platform) continue;
    if (e.content_digest == entry.content_digest) {
      result.entry = e;
      result.already_stored = true;
      return result;
    }
    if (entry.retrieved_at < e.retrieved_at) {
      throw Error(ErrorCode::kValidation,
                  "retrieved_at " + entry.retrieved_at + " precedes stored " +
                      e.retrieved_at + " for " + entry.platform);
    }
  }
  entry.payload_path = "payloads/" + entry.platform + "/" +
                       entry.content_digest + "." +
                       extension_for(entry.media_kind);
  write_file_atomic(root / entry.payload_path, payload);
  result.entry = entry;
  result.manifest.entries.push_back(std::move(entry));
  return result;
}

ChangeSummary diff_snapshots(const SnapshotEntry& old_entry,
                             const SnapshotEntry& new_entry) {
  if (old_entry.platform != new_entry.platform) {
    throw Error(ErrorCode::kPlatformMismatch,
                "platform mismatch: " + old_entry.platform + " vs " +
                    new_entry.platform);
  }
  ChangeSummary s;
  s.changed = old_entry.content_digest != new_entry.content_digest;
  s.old_digest = old_entry.content_digest;
  s.new_digest = new_entry.content_digest;
  s.old_retrieved_at = old_entry.retrieved_at;
  s.new_retrieved_at = new_entry.retrieved_at;
  return s;
}

json to_json(const CorpusManifest& manifest) {
  json j = manifest.extra.is_object() ? manifest.extra : json::object();
  j["schema_version"] = manifest.schema_version;
  j["created_at"] = manifest.created_at;
  json entries = json::array();
  for (const SnapshotEntry& e : manifest.entries) entries.push_back(entry_to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

CorpusManifest manifest_from_json(const json& j) {
  try {
    CorpusManifest m;
    m.schema_version = j.at("schema_version").get<int>();
    m.created_at = j.at("created_at").get<std::string>();
    for (const json& e : j.at("entries")) m.entries.push_back(entry_from_json(e));
    m.extra = j;
    for (const char* f : kManifestFields) m.extra.erase(f);
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed manifest: ") + e.what());
  }
}

CorpusManifest load_manifest(const fs::path& root) {
  fs::path path = root / "manifest.json";
  if (!fs::exists(path)) {
    CorpusManifest m;
    m.created_at = utc_now_iso8601();
    return m;
  }
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed manifest: " + std::string(e.what()));
  }
  return manifest_from_json(j);
}

void save_manifest(const fs::path& root, const CorpusManifest& manifest) {
  write_file_atomic(root / "manifest.json", to_json(manifest).dump(2) + "\n");
}

std::string read_payload(const fs::path& root, const SnapshotEntry& entry) {
  std::string bytes = read_file(root / entry.payload_path);
  if (sha256_hex(bytes) != entry.content_digest) {
    throw Error(ErrorCode::kDigestMismatch, "digest mismatch for " + entry.platform);
  }
  return bytes;
}

bool verify_entry(const fs::path& root, const SnapshotEntry& entry) {
  std::error_code ec;
  if (!fs::is_regular_file(root / entry.payload_path, ec)) return false;
  return sha256_hex(read_file(root / entry.payload_path)) == entry.content_digest;
}

std::vector<SnapshotEntry> latest_snapshots(const CorpusManifest& manifest) {
  std::map<std::string, const SnapshotEntry*> latest;
  for (const SnapshotEntry& e : manifest.entries) {
    auto [it, inserted] = latest.emplace(e.platform, &e);
    if (!inserted && (e.retrieved_at > it->second->retrieved_at ||
                      (e.retrieved_at == it->second->retrieved_at &&
                       e.content_digest > it->second->content_digest))) {
      it->second = &e;
    }
  }
  std::vector<SnapshotEntry> out;
  for (const auto& [_, e] : latest) out.push_back(*e);
  return out;
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string() + ": " +
                                    ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CorpusStore::CorpusStore(fs::path root)
    : root_(std::move(root)), manifest_(load_manifest(root_)) {}

StoreResult CorpusStore::store(const SnapshotEntry& entry,
                               std::string_view payload) {
  std::lock_guard<std::mutex> lock(mu_);
  StoreResult r = store_snapshot(root_, manifest_, entry, payload);
  if (!r.already_stored) {
    save_manifest(root_, r.manifest);
    manifest_ = r.manifest;
  }
  return r;
}

CorpusManifest CorpusStore::manifest() const {
  std::lock_guard<std::mutex> lock(mu_);
  return manifest_;
}

CorpusConfig load_corpus_config(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                "malformed corpus config " + path.string() + ": " + e.what());
  }
  CorpusConfig c;
  c.base_dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  try {
    c.corpus_dir = j.value("corpus_dir", c.corpus_dir);
    c.user_agent = j.value("user_agent", c.user_agent);
    c.request_delay_seconds =
        j.value("request_delay_seconds", c.request_delay_seconds);
    c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
    for (const json& s : j.at("platforms")) {
      CorpusSource src;
      src.platform = s.at("platform").get<std::string>();
      src.url = s.value("url", "");
      if (s.contains("file")) src.file = s.at("file").get<std::string>();
      if (s.contains("media_kind")) {
        src.media_kind = media_kind_from_string(s.at("media_kind").get<std::string>());
      }
      if (!is_valid_platform_id(src.platform)) {
        throw Error(ErrorCode::kValidation,
                    "invalid platform id \"" + src.platform + "\"");
      }
      if (!src.file && !is_http_url(src.url)) {
        throw Error(ErrorCode::kValidation,
                    "platform " + src.platform + " has neither a file nor an http(s) url");
      }
      c.sources.push_back(std::move(src));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse,
                "malformed corpus config " + path.string() + ": " + e.what());
  }
  std::map<std::string, int> seen;
  for (const CorpusSource& s : c.sources) {
    if (++seen[s.platform] > 1) {
      throw Error(ErrorCode::kDuplicate, "duplicate platform " + s.platform);
    }
  }
  if (c.request_delay_seconds < 0 || c.timeout_seconds <= 0) {
    throw Error(ErrorCode::kValidation, "delay must be >= 0 and timeout > 0");
  }
  return c;
}

std::vector<FetchOutcome> fetch_all(const CorpusConfig& config,
                                    const std::optional<std::string>& only_platform) {
  std::vector<const CorpusSource*> selected;
  for (const CorpusSource& s : config.sources) {
    if (!only_platform || s.platform == *only_platform) selected.push_back(&s);
  }
  if (only_platform && selected.empty()) {
    throw Error(ErrorCode::kNotFound, "platform " + *only_platform +
                                          " is not in the corpus config");
  }

  FetchOptions options;
  options.user_agent = config.user_agent;
  options.timeout = std::chrono::seconds(config.timeout_seconds);
  const auto delay = std::chrono::duration<double>(config.request_delay_seconds);

  // One queue per host; local files get their own queue with no delay.
  std::map<std::string, std::vector<size_t>> by_host;
  for (size_t i = 0; i < selected.size(); ++i) {
    const CorpusSource& s = *selected[i];
    by_host[s.file ? std::string() : url_host(s.url)].push_back(i);
  }

  std::vector<FetchOutcome> outcomes(selected.size());
  std::vector<std::future<void>> jobs;
  for (const auto& [host, indices] : by_host) {
    jobs.push_back(std::async(std::launch::async, [&, host = host, indices = indices] {
      bool first = true;
      for (size_t i : indices) {
        const CorpusSource& s = *selected[i];
        if (!host.empty() && !first) std::this_thread::sleep_for(delay);
        first = false;
        try {
          FetchedSnapshot snap =
              s.file ? read_local_snapshot(s.platform, config.base_dir / *s.file,
                                           s.media_kind)
                     : fetch_snapshot(s.platform, s.url, options);
          if (s.media_kind) snap.entry.media_kind = *s.media_kind;
          // A local copy of a published page keeps the page's address.
          if (s.file && is_http_url(s.url)) snap.entry.source_url = s.url;
          outcomes[i] = std::move(snap);
        } catch (const Error& e) {
          outcomes[i] = FetchFailure{s.platform, e.what()};
        }
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return outcomes;
}

}  // namespace tosaudit
