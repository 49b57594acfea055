#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "permob/engines.hpp"
#include "permob/perm.hpp"

namespace permob {

inline constexpr const char* engine_version = "0.1.0";

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Text key of the jointly canonical pair, e.g. "1|2413".
inline std::string cache_key(const Permutation& lower, const Permutation& upper) {
  auto [a, b] = canonical_pair(lower, upper);
  return to_string(a) + "|" + to_string(b);
}

struct CacheEntry {
  std::int64_t value = 0;
  std::string method;
};

// File layout: a header line "permob-cache v1 <version>", one line
// "key<TAB>value<TAB>method" per entry in key order, and a closing line
// "checksum <hex>" holding FNV-1a of everything before it.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path, std::string version = engine_version)
      : path_(std::move(path)), version_(std::move(version)) {}

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

  // False when the file is missing, from another version, or corrupt; the
  // cache is then empty. Problems other than a missing file go to warn.
  bool load(std::ostream* warn = nullptr) {
    entries_.clear();
    std::ifstream in(path_, std::ios::binary);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    auto fail = [&](const std::string& why) {
      if (warn) *warn << "warning: ignoring cache " << path_.string() << ": " << why << "\n";
      entries_.clear();
      return false;
    };
    const auto tail = text.rfind("checksum ");
    if (tail == std::string::npos || (tail != 0 && text[tail - 1] != '\n')) return fail("no checksum");
    const std::string body = text.substr(0, tail);
    std::string stated = text.substr(tail + 9);
    while (!stated.empty() && (stated.back() == '\n' || stated.back() == '\r')) stated.pop_back();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    if (stated != buf) return fail("checksum mismatch");
    std::istringstream lines(body);
    std::string line;
    if (!std::getline(lines, line) || line != header()) return fail("version mismatch");
    while (std::getline(lines, line)) {
      const auto t1 = line.find('\t');
      const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string::npos) return fail("malformed entry");
      try {
        entries_[line.substr(0, t1)] = CacheEntry{std::stoll(line.substr(t1 + 1, t2 - t1 - 1)), line.substr(t2 + 1)};
      } catch (const std::exception&) {
        return fail("malformed value");
      }
    }
    return true;
  }

  std::optional<CacheEntry> find(const Permutation& lower, const Permutation& upper) const {
    auto it = entries_.find(cache_key(lower, upper));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void put(const Permutation& lower, const Permutation& upper, std::int64_t value, std::string method) {
    entries_[cache_key(lower, upper)] = CacheEntry{value, std::move(method)};
    dirty_ = true;
  }

  bool dirty() const { return dirty_; }

  // Writes a sibling temporary file and renames it into place.
  void save() {
    std::string body = header() + "\n";
    for (const auto& [k, e] : entries_) body += k + "\t" + std::to_string(e.value) + "\t" + e.method + "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    auto tmp = path_;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
      out << body << "checksum " << buf << "\n";
    }
    std::filesystem::rename(tmp, path_);
    dirty_ = false;
  }

 private:
  std::string header() const { return "permob-cache v1 " + version_; }

  std::filesystem::path path_;
  std::string version_;
  std::map<std::string, CacheEntry> entries_;
  bool dirty_ = false;
};

}  // namespace permob
