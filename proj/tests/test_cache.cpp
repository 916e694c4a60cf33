#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "subsumlab/cache.hpp"

using namespace subsumlab;
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// A fresh directory per test case so runs never see each other's entries.
fs::path fresh_dir(const std::string& tag) {
    static std::mt19937_64 rng(std::random_device{}());
    const fs::path dir = fs::temp_directory_path() /
                         ("subsumlab-test-" + tag + "-" + std::to_string(rng()));
    fs::remove_all(dir);
    return dir;
}

ordered_json payload(int x) {
    return ordered_json{{"rows", ordered_json::array({x})}};
}

}  // namespace

TEST_CASE("digest is stable and collision-ready") {
    // FNV-1a 64 of the empty string is the offset basis
    // 14695981039346656037 = 0xcbf29ce484222325.
    CHECK(cache_digest("") == "cbf29ce484222325");
    // FNV-1a 64 of "a": (basis ^ 97) * prime = 0xaf63dc4c8601ec8c.
    CHECK(cache_digest("a") == "af63dc4c8601ec8c");
    CHECK(cache_digest("op=census;n=4;class=unrestricted;params=").size() == 16);
    CHECK(cache_digest("x") != cache_digest("y"));
}

TEST_CASE("hit after miss, across instances") {
    const fs::path dir = fresh_dir("hit");
    int calls = 0;
    const auto compute = [&] {
        ++calls;
        return payload(42);
    };
    ResultCache cache(dir, true);
    CHECK(cache.get_or_compute("k1", compute) == payload(42));
    CHECK(calls == 1);
    CHECK(cache.get_or_compute("k1", compute) == payload(42));
    CHECK(calls == 1);  // served from disk
    ResultCache second(dir, true);
    CHECK(second.get_or_compute("k1", compute) == payload(42));
    CHECK(calls == 1);
    // A different key computes again.
    CHECK(second.get_or_compute("k2", compute) == payload(42));
    CHECK(calls == 2);
    fs::remove_all(dir);
}

TEST_CASE("entries carry the documented fields") {
    const fs::path dir = fresh_dir("fields");
    ResultCache cache(dir, true);
    cache.get_or_compute("k", [] { return payload(7); });
    const fs::path file = dir / (cache_digest("k") + ".json");
    REQUIRE(fs::exists(file));
    std::ifstream in(file);
    const ordered_json entry = ordered_json::parse(in);
    CHECK(entry["key"] == "k");
    CHECK(entry["value"] == payload(7));
    CHECK(entry["tool_version"] == "1.0.0");
    // created_at is ISO-8601 UTC: 2026-08-14T12:34:56Z shaped.
    const std::string stamp = entry["created_at"].get<std::string>();
    CHECK(stamp.size() == 20);
    CHECK(stamp[4] == '-');
    CHECK(stamp[10] == 'T');
    CHECK(stamp.back() == 'Z');
    fs::remove_all(dir);
}

TEST_CASE("disabled cache always computes and writes nothing") {
    const fs::path dir = fresh_dir("disabled");
    int calls = 0;
    ResultCache cache(dir, false);
    cache.get_or_compute("k", [&] {
        ++calls;
        return payload(1);
    });
    cache.get_or_compute("k", [&] {
        ++calls;
        return payload(1);
    });
    CHECK(calls == 2);
    CHECK_FALSE(fs::exists(dir / (cache_digest("k") + ".json")));
    fs::remove_all(dir);
}

TEST_CASE("corrupt entries degrade to computation and heal") {
    const fs::path dir = fresh_dir("corrupt");
    fs::create_directories(dir);
    const fs::path file = dir / (cache_digest("k") + ".json");
    {
        std::ofstream out(file);
        out << "{not json at all";
    }
    int calls = 0;
    ResultCache cache(dir, true);
    CHECK(cache.get_or_compute("k", [&] {
        ++calls;
        return payload(5);
    }) == payload(5));
    CHECK(calls == 1);
    // The recompute overwrote the junk, so the next read hits.
    CHECK(cache.get_or_compute("k", [&] {
        ++calls;
        return payload(5);
    }) == payload(5));
    CHECK(calls == 1);
    fs::remove_all(dir);
}

TEST_CASE("major version mismatches are treated as misses") {
    const fs::path dir = fresh_dir("version");
    fs::create_directories(dir);
    const fs::path file = dir / (cache_digest("k") + ".json");
    {
        ordered_json stale;
        stale["key"] = "k";
        stale["value"] = payload(99);
        stale["created_at"] = "2020-01-01T00:00:00Z";
        stale["tool_version"] = "0.9.0";
        std::ofstream out(file);
        out << stale.dump(2);
    }
    int calls = 0;
    ResultCache cache(dir, true);
    CHECK(cache.get_or_compute("k", [&] {
        ++calls;
        return payload(5);
    }) == payload(5));
    CHECK(calls == 1);  // the 0.9.0 entry was ignored
    // Same major, different minor: accepted.
    {
        ordered_json minor;
        minor["key"] = "k2";
        minor["value"] = payload(31);
        minor["created_at"] = "2026-01-01T00:00:00Z";
        minor["tool_version"] = "1.7.3";
        std::ofstream out(dir / (cache_digest("k2") + ".json"));
        out << minor.dump(2);
    }
    CHECK(cache.get_or_compute("k2", [&] {
        ++calls;
        return payload(5);
    }) == payload(31));
    CHECK(calls == 1);
    fs::remove_all(dir);
}

TEST_CASE("a foreign key at the digest path is a miss") {
    const fs::path dir = fresh_dir("foreign");
    fs::create_directories(dir);
    // Entry parked at the digest path of "mine" but recording another key,
    // as a hash collision would produce.
    {
        ordered_json foreign;
        foreign["key"] = "theirs";
        foreign["value"] = payload(1);
        foreign["created_at"] = "2026-01-01T00:00:00Z";
        foreign["tool_version"] = "1.0.0";
        std::ofstream out(dir / (cache_digest("mine") + ".json"));
        out << foreign.dump(2);
    }
    int calls = 0;
    ResultCache cache(dir, true);
    CHECK(cache.get_or_compute("mine", [&] {
        ++calls;
        return payload(2);
    }) == payload(2));
    CHECK(calls == 1);
    fs::remove_all(dir);
}

TEST_CASE("directory resolution order") {
    const std::string saved_cache = std::getenv("SUBSUMLAB_CACHE")
                                        ? std::getenv("SUBSUMLAB_CACHE")
                                        : "";
    const std::string saved_xdg =
        std::getenv("XDG_CACHE_HOME") ? std::getenv("XDG_CACHE_HOME") : "";

    setenv("SUBSUMLAB_CACHE", "/tmp/env-cache", 1);
    setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(ResultCache::resolve_dir("/tmp/flag") == fs::path("/tmp/flag"));
    CHECK(ResultCache::resolve_dir("") == fs::path("/tmp/env-cache"));
    unsetenv("SUBSUMLAB_CACHE");
    CHECK(ResultCache::resolve_dir("") == fs::path("/tmp/xdg/subsumlab"));
    unsetenv("XDG_CACHE_HOME");
    const fs::path fallback = ResultCache::resolve_dir("");
    CHECK(fallback.filename() == "subsumlab");  // HOME/.cache/subsumlab

    if (!saved_cache.empty()) setenv("SUBSUMLAB_CACHE", saved_cache.c_str(), 1);
    if (!saved_xdg.empty()) setenv("XDG_CACHE_HOME", saved_xdg.c_str(), 1);
}

TEST_CASE("randomized keys round-trip") {
    const fs::path dir = fresh_dir("random");
    ResultCache cache(dir, true);
    std::mt19937_64 rng(20260814);
    std::vector<std::string> keys;
    for (int i = 0; i < 100; ++i) {
        keys.push_back("op=test;i=" + std::to_string(i) + ";salt=" +
                       std::to_string(rng()));
        const ordered_json value = payload(i);
        CHECK(cache.get_or_compute(keys.back(), [&] { return value; }) == value);
    }
    // Re-read every key; the stored value must match without recomputation.
    for (int i = 0; i < 100; ++i) {
        CHECK(cache.get_or_compute(keys[static_cast<std::size_t>(i)], [&]() -> ordered_json {
            FAIL("unexpected recomputation");
            return {};
        }) == payload(i));
    }
    fs::remove_all(dir);
}
