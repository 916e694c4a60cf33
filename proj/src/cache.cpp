#include "subsumlab/cache.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string_view>

#include "subsumlab/version.hpp"

namespace subsumlab {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string utc_now_iso8601() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::string_view major_of(std::string_view version) {
    return version.substr(0, version.find('.'));
}

void warn(const std::string& what) {
    std::cerr << "cache warning: " << what << " (continuing without the cache entry)\n";
}

}  // namespace

std::string cache_digest(const std::string& key) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : key) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string digest(16, '0');
    for (int i = 15; i >= 0; --i) {
        digest[static_cast<std::size_t>(i)] = hex[hash & 0xf];
        hash >>= 4;
    }
    return digest;
}

std::filesystem::path ResultCache::resolve_dir(const std::string& flag_dir) {
    if (!flag_dir.empty()) return flag_dir;
    if (const char* env = std::getenv("SUBSUMLAB_CACHE"); env != nullptr && *env != '\0') {
        return env;
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return fs::path(xdg) / "subsumlab";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return fs::path(home) / ".cache" / "subsumlab";
    }
    return fs::temp_directory_path() / "subsumlab-cache";
}

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {}

std::filesystem::path ResultCache::entry_path(const std::string& key) const {
    return dir_ / (cache_digest(key) + ".json");
}

std::optional<ordered_json> ResultCache::read_entry(const std::string& key) const {
    const fs::path path = entry_path(key);
    try {
        std::ifstream in(path);
        if (!in.is_open()) return std::nullopt;  // plain miss, not worth a warning
        const ordered_json entry = ordered_json::parse(in);
        if (!entry.is_object() || !entry.contains("key") || !entry.contains("value") ||
            !entry.contains("tool_version")) {
            warn("malformed entry " + path.string());
            return std::nullopt;
        }
        // The filename is only a digest: a different key in the file means a
        // hash collision or foreign file, so treat it as a miss.
        if (entry["key"] != key) return std::nullopt;
        const std::string version = entry["tool_version"].get<std::string>();
        if (major_of(version) != major_of(kVersion)) return std::nullopt;
        return entry["value"];
    } catch (const std::exception& e) {
        warn("unreadable entry " + path.string() + ": " + e.what());
        return std::nullopt;
    }
}

void ResultCache::write_entry(const std::string& key, const ordered_json& value) const {
    try {
        fs::create_directories(dir_);
        const fs::path path = entry_path(key);
        ordered_json entry;
        entry["key"] = key;
        entry["value"] = value;
        entry["created_at"] = utc_now_iso8601();
        entry["tool_version"] = std::string(kVersion);
        // Atomic publish: write a sibling temp file, then rename over the
        // final name, so concurrent readers only ever see complete entries.
        const fs::path temp =
            path.parent_path() / (path.filename().string() + ".tmp." +
                                  std::to_string(static_cast<long>(::getpid())));
        {
            std::ofstream out(temp);
            if (!out.is_open()) {
                warn("cannot open " + temp.string() + " for writing");
                return;
            }
            out << entry.dump(2) << "\n";
            if (!out.good()) {
                warn("short write to " + temp.string());
                return;
            }
        }
        fs::rename(temp, path);
    } catch (const std::exception& e) {
        warn(std::string("write failed: ") + e.what());
    }
}

ordered_json ResultCache::get_or_compute(
    const std::string& key, const std::function<ordered_json()>& compute) {
    if (!enabled_) return compute();
    if (auto hit = read_entry(key)) return std::move(*hit);
    ordered_json value = compute();
    write_entry(key, value);
    return value;
}

}  // namespace subsumlab
