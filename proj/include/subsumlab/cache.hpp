#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "json.hpp"

namespace subsumlab {

// On-disk result cache: one JSON file per entry under a directory, keyed by
// canonical strings like "op=census;n=40;class=unrestricted;params=".  Each
// file stores {key, value, created_at, tool_version}.  Reads verify the full
// key (the filename is only a hash) and the tool's major version; any I/O or
// parse trouble degrades to plain computation with a warning on stderr.
class ResultCache {
public:
    // Directory resolution: the explicit flag if non-empty, else the
    // SUBSUMLAB_CACHE environment variable, else a per-user cache directory
    // (XDG_CACHE_HOME or ~/.cache) plus "/subsumlab".
    static std::filesystem::path resolve_dir(const std::string& flag_dir);

    ResultCache(std::filesystem::path dir, bool enabled);

    // Cached value for the key, or compute(), stored for next time.  The
    // returned value is byte-identical whichever path produced it, because
    // compute() is deterministic and the store round-trips JSON exactly.
    nlohmann::ordered_json get_or_compute(
        const std::string& key,
        const std::function<nlohmann::ordered_json()>& compute);

    const std::filesystem::path& dir() const { return dir_; }
    bool enabled() const { return enabled_; }

private:
    std::optional<nlohmann::ordered_json> read_entry(const std::string& key) const;
    void write_entry(const std::string& key, const nlohmann::ordered_json& value) const;
    std::filesystem::path entry_path(const std::string& key) const;

    std::filesystem::path dir_;
    bool enabled_;
};

// 64-bit FNV-1a of the key as 16 hex digits; used as the cache filename.
std::string cache_digest(const std::string& key);

}  // namespace subsumlab
