#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "hkmult/errors.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

inline constexpr const char* kEngineVersion = "hkmult-1";

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string content_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

struct CacheEntry {
  std::string hash;
  long q = 0;
  BigInt count;
  std::string version = kEngineVersion;
};

inline nlohmann::json to_json(const CacheEntry& e) {
  return {{"hash", e.hash}, {"q", e.q}, {"count", e.count.get_str()}, {"version", e.version}};
}

inline CacheEntry cache_entry_from_json(const nlohmann::json& j) {
  CacheEntry e;
  e.hash = j.at("hash").get<std::string>();
  e.q = j.at("q").get<long>();
  e.count = BigInt(j.at("count").get<std::string>());
  e.version = j.at("version").get<std::string>();
  return e;
}

/// Append-only JSON-lines store of colength counts.
class ColengthCache {
 public:
  explicit ColengthCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

  std::filesystem::path file() const { return dir_ / "colengths.jsonl"; }

  std::optional<BigInt> lookup(const std::string& hash, long q) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find({hash, q, kEngineVersion});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& hash, long q, const BigInt& count) {
    std::lock_guard lock(mutex_);
    if (entries_.contains({hash, q, kEngineVersion})) return;
    std::filesystem::create_directories(dir_);
    std::ofstream out(file(), std::ios::app);
    if (!out) throw std::runtime_error("cannot write cache file " + file().string());
    out << to_json(CacheEntry{hash, q, count, kEngineVersion}).dump() << '\n';
    entries_[{hash, q, kEngineVersion}] = count;
  }

  std::vector<CacheEntry> entries() const {
    std::lock_guard lock(mutex_);
    std::vector<CacheEntry> out;
    for (const auto& [key, count] : entries_) out.push_back({std::get<0>(key), std::get<1>(key), count, std::get<2>(key)});
    return out;
  }

  /// Number of lines that failed to parse on load.
  std::size_t skipped_lines() const { return skipped_; }

  void clear() {
    std::lock_guard lock(mutex_);
    std::error_code ec;
    std::filesystem::remove(file(), ec);
    entries_.clear();
  }

 private:
  void load() {
    std::ifstream in(file());
    if (!in) return;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      try {
        const auto e = cache_entry_from_json(nlohmann::json::parse(line));
        entries_[{e.hash, e.q, e.version}] = e.count;
      } catch (const std::exception&) {
        ++skipped_;
      }
    }
  }

  std::filesystem::path dir_;
  std::map<std::tuple<std::string, long, std::string>, BigInt> entries_;
  std::size_t skipped_ = 0;
  mutable std::mutex mutex_;
};

}  // namespace hkmult
